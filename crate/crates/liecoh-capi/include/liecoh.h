/* C interface to the liecoh cohomology engine.
 *
 * All *_json functions allocate a NUL-terminated JSON string into *out_json
 * on success; release it with liecoh_string_free.  Group handles are opaque
 * and released with liecoh_group_free.
 */

#ifndef LIECOH_H
#define LIECOH_H

#include <stdint.h>

#ifdef __cplusplus
extern "C" {
#endif

/* Error codes. */
#define LIECOH_OK 0
/* Malformed input: bad group name, bad selector, null pointer. */
#define LIECOH_ERR_INVALID 1
/* The requested group or prime is not supported. */
#define LIECOH_ERR_UNSUPPORTED 2
/* A mathematical self-check failed. */
#define LIECOH_ERR_INVARIANT 3

/* Opaque handle to a group of the catalogue. */
typedef struct liecoh_group liecoh_group;

/* Create a group handle from its name ("G2", "E8", "SU(4)", "Spin(9)", ...).
 * assume_spin_log2 must be nonzero to accept the base-2 logarithm reading of
 * the Spin cup lengths; Spin groups are rejected otherwise. */
int liecoh_group_new(const char *name, int assume_spin_log2,
                     liecoh_group **out);

/* Release a group handle.  Accepts NULL. */
void liecoh_group_free(liecoh_group *g);

/* Rank and manifold dimension (0 when g is NULL). */
unsigned int liecoh_group_rank(const liecoh_group *g);
unsigned int liecoh_group_dim(const liecoh_group *g);

/* Degreewise integral cohomology groups as JSON:
 * {"group", "dim", "entries": [{"degree", "free", "torsion": {prime: count}}]} */
int liecoh_table_json(const liecoh_group *g, char **out_json);

/* Graded dimensions of the mod `prime` cohomology as a JSON array of
 * [degree, dimension] pairs.
 * which: 0 = the ring, 1 = Bockstein cohomology, 2 = Bockstein image. */
int liecoh_dims_json(const liecoh_group *g, unsigned int prime, int which,
                     char **out_json);

/* A ring presentation as JSON:
 * {"coefficient", "generators": [{"name", "degree", "order"}],
 *  "relations": [string], "graded_dims": {degree: count} | null}.
 * kind: 0 = the mod `prime` ring, 1 = the integral image of the
 * flag-variety map (prime ignored), 2 = the `prime`-torsion ideal. */
int liecoh_presentation_json(const liecoh_group *g, unsigned int prime,
                             int kind, char **out_json);

/* Weyl group report as JSON:
 * {"cartan_type", "rank", "order", "max_length", "length_histogram",
 *  "flag_poincare"}.  cap bounds the number of enumerated elements. */
int liecoh_weyl_json(const char *cartan_type, uint64_t cap, char **out_json);

/* Release a string returned by this library.  Accepts NULL. */
void liecoh_string_free(char *s);

#ifdef __cplusplus
}
#endif

#endif /* LIECOH_H */
