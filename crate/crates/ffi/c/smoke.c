#include <stdio.h>
#include "lj_galois.h"
int main(void) {
    LjRatFunc *r = NULL;
    LjVerdict *v = NULL;
    uint8_t c = 0;
    if (lj_ratfunc_parse("(-3*x^5-4*x^3+4)/(16*x^7)", &r) != LJ_STATUS_OK) return 1;
    if (lj_kovacic_solve(r, &v) != LJ_STATUS_OK) return 2;
    lj_verdict_case(v, &c);
    char *j = NULL;
    lj_verdict_json(v, &j);
    printf("case %u %s\n", c, j);
    lj_string_free(j);
    lj_verdict_free(v);
    lj_ratfunc_free(r);
    if (lj_ratfunc_parse("x +", &r) != LJ_STATUS_SYNTAX) return 3;
    printf("err: %s\n", lj_last_error());
    return 0;
}
