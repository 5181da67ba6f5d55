/* cc examples/size.c -Iinclude -L../../target/debug -lmultilift_ffi */
#include <stdio.h>
#include "multilift.h"

int main(void) {
    MlCode *code = NULL;
    if (ml_code_build(2, 6, 2, 2, &code) != ML_STATUS_OK) {
        fprintf(stderr, "error: %s\n", ml_last_error());
        return 2;
    }
    char *size = NULL;
    ml_code_size(code, &size);
    MlVerifyReport report;
    MlStatus st = ml_code_verify(code, 5000, &report);
    printf("N=%s min_distance=%zu status=%d\n", size, report.min_distance, (int)st);
    ml_string_free(size);
    ml_code_free(code);

    char *big = NULL;
    if (ml_size_formula(2, 100, 10, 5, &big) == ML_STATUS_OK) {
        printf("N(2,100,10,5)=%s\n", big);
        ml_string_free(big);
    }
    if (ml_size_formula(2, 5, 3, 2, &big) != ML_STATUS_OK)
        printf("rejected: %s\n", ml_last_error());
    return st;
}
