/* Minimal consumer of the C ABI. Build, from the repository root:
 *
 *   cargo build -p hopfcheck-ffi
 *   cc -std=c99 -Wall -Icrates/hopfcheck-ffi/include \
 *      crates/hopfcheck-ffi/examples/demo.c \
 *      target/debug/libhopfcheck_ffi.a -lpthread -ldl -lm -o demo
 */
#include <assert.h>
#include <stdio.h>
#include <string.h>
#include "hopfcheck.h"

int main(void) {
    HcAlgebra *h = NULL;
    assert(hc_build_group_dual("c4", 2, &h) == HC_STATUS_OK);
    assert(hc_algebra_dim(h) == 4);
    assert(hc_algebra_modulus(h) == 2);

    size_t violations = 99;
    assert(hc_algebra_validate(h, &violations) == HC_STATUS_OK);
    assert(violations == 0);

    bool ss = false;
    assert(hc_is_semisimple(h, &ss) == HC_STATUS_OK && ss);

    char *report = NULL;
    assert(hc_masuoka_report_json(h, &report) == HC_STATUS_OK);
    assert(strstr(report, "\"agreement\": true") != NULL);
    hc_string_free(report);
    hc_algebra_free(h);

    assert(hc_build_group_dual("nope", 2, &h) == HC_STATUS_PARSE_ERROR);
    assert(strstr(hc_last_error(), "nope") != NULL);

    puts("c abi ok");
    return 0;
}
