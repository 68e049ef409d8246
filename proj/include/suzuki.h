/* C interface to the Suzuki algebra workbench.
 *
 * All computation lives behind an opaque handle created from the family
 * parameters (N, n, mu, lambda). Report functions return a malloc'd JSON
 * document through *json_out; free it with suzuki_string_free. Every
 * payload carries an "ok" flag summarizing its verdicts, so callers can
 * derive exit status without re-running anything.
 *
 * Functions return SUZUKI_OK on success or an error code; on error,
 * suzuki_last_error() describes the failure (thread-local).
 */
#ifndef SUZUKI_H
#define SUZUKI_H

#ifdef __cplusplus
extern "C" {
#endif

#define SUZUKI_OK 0
#define SUZUKI_ERR_INVALID_ARGUMENT 1
#define SUZUKI_ERR_RUNTIME 2
#define SUZUKI_ERR_IO 3

typedef struct suzuki_algebra suzuki_algebra;

const char* suzuki_version(void);
const char* suzuki_last_error(void);
void suzuki_string_free(char* s);

/* mu and lambda must be +1 or -1; N >= 1, n >= 2. */
int suzuki_algebra_create(long N, long n, int mu, int lambda, suzuki_algebra** out);
/* Same, with a structure-table disk cache rooted at cache_dir (may be
 * NULL or empty for no caching). Cache files are validated by checksum
 * and format version; a mismatch falls back to a fresh build. */
int suzuki_algebra_create_cached(long N, long n, int mu, int lambda, const char* cache_dir,
                                 suzuki_algebra** out);
void suzuki_algebra_free(suzuki_algebra* a);

long suzuki_algebra_dim(const suzuki_algebra* a);
long suzuki_algebra_conductor(const suzuki_algebra* a);

/* Hopf axiom verification report. */
int suzuki_algebra_verify(const suzuki_algebra* a, char** json_out);
/* Structure constant tables (basis, unit, sparse mult triples). */
int suzuki_algebra_export(const suzuki_algebra* a, char** json_out);
/* Group-like elements with distinctness report. */
int suzuki_grouplikes(const suzuki_algebra* a, char** json_out);
/* Direct-sum decomposition rank check. */
int suzuki_decompose(const suzuki_algebra* a, char** json_out);

/* Twist the comodule Lambda_{s,t} along an automorphism and report the
 * support transport. aut_descriptor: "psi:<s>:<t>:<xi>", "phi:<s>:<t>:<xi>",
 * "gamma:<theta1>:<theta2>:<s>", or "identity". */
int suzuki_comodule_twist(const suzuki_algebra* a, long s, long t, const char* aut_descriptor,
                          char** json_out);

/* Classified automorphism candidates with conditions/verification verdicts. */
int suzuki_aut_list(const suzuki_algebra* a, char** json_out);
/* Full verification report for one descriptor. */
int suzuki_aut_verify(const suzuki_algebra* a, const char* aut_descriptor, char** json_out);
/* Composition table of the verified automorphism group. */
int suzuki_aut_table(const suzuki_algebra* a, char** json_out);
/* Exhaustive ansatz search over a coefficient grid; preset is "default",
 * "rationals" or "roots". */
int suzuki_aut_search(const suzuki_algebra* a, const char* grid_preset, char** json_out);

#ifdef __cplusplus
}
#endif

#endif /* SUZUKI_H */
