#ifndef TUTTEQ_H
#define TUTTEQ_H

/* C interface to the exact triangulation-series toolkit.
 *
 * All functions that produce output allocate NUL-terminated strings the
 * caller must release with tq_string_free. Exact numbers are rendered as
 * "p" or "p/q"; structured results are JSON. On any status other than
 * TQ_OK, tq_last_error holds a message valid until the next call on the
 * same session. Sessions are not thread-safe; use one per thread.
 */

#include <stddef.h>

#ifdef __cplusplus
extern "C" {
#endif

typedef struct tq_session tq_session;

typedef enum {
    TQ_OK = 0,
    TQ_EINVAL = 1,   /* bad argument */
    TQ_EDOMAIN = 2,  /* mathematically undefined for this input */
    TQ_ENOTFOUND = 3,/* search completed with no object within bounds */
    TQ_EINTERNAL = 4
} tq_status;

tq_session* tq_session_new(void);
void tq_session_free(tq_session* s);
const char* tq_last_error(const tq_session* s);
void tq_string_free(char* p);

/* n-th series coefficient t(n) (0 for n <= 0) */
tq_status tq_coeff(tq_session* s, long n, char** out);

/* [x^n] of the r-th power of the series, r >= 1 */
tq_status tq_power_coeff(tq_session* s, int r, long n, char** out);

/* A_r(n) = [x^n] g^r / [x^n] g, r >= 2, n >= 1 */
tq_status tq_ratio(tq_session* s, int r, long n, char** out);

/* closed form of A_r as a rational function of n, plus its limit */
tq_status tq_closed_form(tq_session* s, int r, char** out_formula, char** out_limit);

/* B_r = lim A_r(n) */
tq_status tq_limit(tq_session* s, int r, char** out);

/* JSON [{"r":..,"fraction":"..","decimal":".."}, ...] for r = 2..max_r */
tq_status tq_table(tq_session* s, int max_r, int decimals, char** out_json);

/* algebraic equation recovered from the first `terms` series coefficients;
 * out is an expression in x and y per the expression grammar */
tq_status tq_guess_algeq(tq_session* s, int terms, int deg_y, int deg_x, char** out);

/* linear ODE annihilating the series, from the built-in algebraic equation;
 * JSON {"order":..,"coeffs":["..x-expressions.."]} (index = derivative) */
tq_status tq_algeq_to_ode(tq_session* s, char** out_json);

/* coefficient recurrence of that ODE;
 * JSON {"order":..,"valid_from":..,"coeffs":["..n-expressions.."]} */
tq_status tq_ode_to_rec(tq_session* s, char** out_json);

/* creative telescoping on the convolution term t(k) t(n-k);
 * JSON {"order":..,"coeffs":[..],"certificate":"..","certificate_valid":bool,
 *       "sum_order":..,"sum_coeffs":[..],"sum_valid_from":..} where the sum_*
 * fields describe the boundary-corrected operator for the restricted sum */
tq_status tq_zeilberger(tq_session* s, int max_order, char** out_json);

/* rational roots in y of the built-in equation at x = x0 ("p/q" string);
 * JSON ["p/q", ...] */
tq_status tq_eval_quartic(tq_session* s, const char* x0, char** out_json);

/* floating cross-checks of the published constant;
 * JSON {"jr_value":..,"c_value":..,"verdict":".."} */
tq_status tq_critique(tq_session* s, char** out_json);

/* full verification suite; JSON
 * {"all_pass":bool,"items":[{"name":..,"expected":..,"actual":..,"pass":..}]} */
tq_status tq_verify_all(tq_session* s, long max_n, int max_r, char** out_json);

#ifdef __cplusplus
}
#endif

#endif
