/* C ABI for the polycov library: monodromy groups, string C-groups, and
 * finite regular covers of abstract polytopes.
 *
 * Conventions:
 *   - Handles are opaque; release them with the matching *_free function.
 *   - Every function returning `int` yields POLYCOV_OK (0) on success or a
 *     POLYCOV_ERR_* code; polycov_last_error_message() then describes the
 *     failure (thread-local, valid until the next failing call).
 *   - Strings handed out through `char **out` parameters are owned by the
 *     library and must be released with polycov_string_free().
 *   - JSON schemas match the polycov CLI: posets are
 *     {"rank":n,"faces":[{"id","rank"}..],"cover_relations":[[lo,hi]..]},
 *     sggis are {"rank":n,"domain":d,"generators":[[images]..]}, and group
 *     orders are factored strings such as "2^12 * 3^11 * 5".
 *   - A cap of 0 means "use the built-in default".
 */

#ifndef POLYCOV_H
#define POLYCOV_H

#include <stdint.h>

#ifdef __cplusplus
extern "C" {
#endif

enum {
    POLYCOV_OK = 0,
    POLYCOV_ERR_NULL_ARGUMENT = 1,
    POLYCOV_ERR_INVALID_UTF8 = 2,
    POLYCOV_ERR_PARSE = 3,
    POLYCOV_ERR_DOMAIN = 4,
    POLYCOV_ERR_CAP_EXCEEDED = 5,
    POLYCOV_ERR_INTERNAL = 6
};

typedef struct PolycovPolytope PolycovPolytope;
typedef struct PolycovSggi PolycovSggi;

const char *polycov_last_error_message(void);
void polycov_string_free(char *s);

/* polytopes */
int polycov_polytope_make(const char *expr, PolycovPolytope **out);
int polycov_polytope_from_json(const char *json, PolycovPolytope **out);
int polycov_polytope_to_json(const PolycovPolytope *p, char **out);
int polycov_polytope_validate(const PolycovPolytope *p, int *passed, char **report);
int polycov_polytope_flag_count(const PolycovPolytope *p, unsigned long long *out);
int polycov_polytope_dual(const PolycovPolytope *p, PolycovPolytope **out);
void polycov_polytope_free(PolycovPolytope *p);

/* sggis and groups */
int polycov_monodromy(const PolycovPolytope *p, PolycovSggi **out);
int polycov_sggi_from_json(const char *json, PolycovSggi **out);
int polycov_sggi_to_json(const PolycovSggi *s, char **out);
int polycov_sggi_rank(const PolycovSggi *s, unsigned long long *out);
int polycov_sggi_order_string(const PolycovSggi *s, char **out);
int polycov_sggi_schlafli_string(const PolycovSggi *s, char **out);
int polycov_sggi_is_string_c_group(const PolycovSggi *s, unsigned long long cap, int *out);
void polycov_sggi_free(PolycovSggi *s);

/* the cover machinery */
int polycov_regular_cover_json(const PolycovSggi *s, unsigned long long cap,
                               unsigned long long domain_cap, char **out);
int polycov_extend_2k(const PolycovSggi *s, unsigned long long cap,
                      unsigned long long domain_cap, PolycovSggi **group, char **report);
int polycov_reconstruct(const PolycovSggi *s, unsigned long long cap,
                        PolycovPolytope **out);

#ifdef __cplusplus
}
#endif

#endif /* POLYCOV_H */
