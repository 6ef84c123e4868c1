#ifndef BIDISK_BIDISK_H
#define BIDISK_BIDISK_H

/* C interface to the bidisk library: toric-domain capacities, weight
 * expansions, embedding verdicts, billiard action profiles, and triangle
 * packing checks.
 *
 * Conventions:
 *   - Every fallible call returns a bd_status; BD_OK means success.
 *   - On failure the thread-local message from bd_last_error() describes
 *     what went wrong; out-parameters are left untouched.
 *   - Objects created by bd_*_create/bd_*_parse calls are released with the
 *     matching bd_*_free; strings returned through char** are released with
 *     bd_string_free. NULL is safe to pass to every free function.
 *   - Array results use caller-allocated buffers with explicit capacities.
 */

#include <stddef.h>
#include <stdint.h>

#ifdef __cplusplus
extern "C" {
#endif

typedef enum bd_status {
  BD_OK = 0,
  BD_ERR_INVALID_ARGUMENT = 1, /* bad parameter or malformed input */
  BD_ERR_PARSE = 2,            /* text failed to parse */
  BD_ERR_NUMERIC = 3,          /* iteration or quadrature failed */
  BD_ERR_BUFFER = 4            /* caller buffer too small */
} bd_status;

/* Library version as "major.minor.patch". Static storage; do not free. */
const char* bd_version(void);

/* Message for the most recent failure on this thread; never NULL. */
const char* bd_last_error(void);

void bd_string_free(char* s);

/* ---------- regions (concave toric domains) ---------- */

typedef struct bd_region bd_region;

/* Inscribed model of the bidisk boundary curve with n segments (n >= 1). */
bd_status bd_region_omega0(int segments, bd_region** out);

/* Triangle with axis intercepts (a, 0) and (0, b). */
bd_status bd_region_triangle(double a, double b, bd_region** out);

/* Parses {"vertices": [[x, y], ...]} or the literal "omega0:N". */
bd_status bd_region_parse(const char* text, bd_region** out);

bd_status bd_region_vertex_count(const bd_region* r, size_t* out);

/* Writes the chain as x0,y0,x1,y1,... into xy (capacity in doubles). */
bd_status bd_region_vertices(const bd_region* r, double* xy, size_t capacity);

bd_status bd_region_area(const bd_region* r, double* out);

/* Serializes as {"vertices": ...}; release with bd_string_free. */
bd_status bd_region_to_json(const bd_region* r, char** out);

void bd_region_free(bd_region* r);

/* ---------- weight expansion ---------- */

/* First `count` weights of the region's greedy triangle expansion, stopping
 * early when the remaining weight drops below min_weight (pass 0 to keep
 * all). Writes at most `capacity` doubles; *written reports how many. */
bd_status bd_weight_sequence(const bd_region* r, int count, double min_weight,
                             double* out, size_t capacity, size_t* written);

/* ---------- domains and capacities ---------- */

typedef struct bd_domain bd_domain;

/* Parses {"ball": a} | {"ellipsoid": [a,b]} | {"polydisk": [a,b]} |
 * {"concave": ...} | {"union": [...]} | "bidisk". */
bd_status bd_domain_parse(const char* text, bd_domain** out);

void bd_domain_free(bd_domain* d);

/* Writes c_0..c_kmax (kmax+1 doubles) into out. */
bd_status bd_domain_capacities(const bd_domain* d, int kmax, double* out,
                               size_t capacity);

/* ---------- embedding verdicts ---------- */

/* Capacity test of source -> target. embeds: -1 obstructed, 0 unknown
 * (capacities cannot refute), +1 embeds. witness_k is the least obstructing
 * index, or -1. criterion (optional, bd_string_free) names the deciding
 * rule. */
bd_status bd_obstruct(const bd_domain* source, const bd_domain* target,
                      int kmax, double slack, int* embeds, int* witness_k,
                      char** criterion);

/* Closed-form verdict for the bidisk into a ball ("ball", reads a only),
 * ellipsoid ("ellipsoid"), or polydisk ("polydisk"). */
bd_status bd_bidisk_into(const char* target_kind, double a, double b,
                         int* embeds, char** criterion);

/* Closed-form verdict for the ellipsoid E(ratio*b, b), ratio 1 or 2, into
 * the bidisk. */
bd_status bd_ellipsoid_into_bidisk(int ratio, double b, int* embeds,
                                   char** criterion);

/* Whether the triangle with legs (a, b) sits under the region's chain;
 * min_value receives the minimum of x/a + y/b over the chain. */
bd_status bd_region_contains_ellipsoid(const bd_region* r, double a, double b,
                                       int* contained, double* min_value);

/* ---------- billiard action profiles ---------- */

typedef struct bd_billiard bd_billiard;

/* Smoothed circular billiard at strength epsilon in (0, 1). */
bd_status bd_billiard_create(double epsilon, bd_billiard** out);

void bd_billiard_free(bd_billiard* m);

/* Largest admissible angular momentum M. */
bd_status bd_billiard_max_momentum(const bd_billiard* m, double* out);

/* Return time G and swept angle alpha at angular momentum v, |v| < M. */
bd_status bd_billiard_g_alpha(const bd_billiard* m, double v, double* g,
                              double* alpha);

/* Independent ODE measurement of the same quantities with step dt. */
bd_status bd_billiard_ode_oracle(const bd_billiard* m, double v, double dt,
                                 double* g, double* alpha);

/* Action profile at n >= 3 momenta: writes n rows of
 * (v, G, alpha, rho1, rho2), i.e. 5*n doubles, row-major. */
bd_status bd_billiard_profile(const bd_billiard* m, int n, double* rows,
                              size_t capacity);

/* Sup-distance between the profile's action curve and the limiting
 * boundary curve, probed on an n-point grid. */
bd_status bd_billiard_limit_error(const bd_billiard* m, int n, double* out);

/* ---------- triangle packing ---------- */

/* Verifies a placement document (same JSON schema as the CLI). When
 * margin_override >= 0 it replaces the document's margin. ok receives 1/0;
 * report (optional, bd_string_free) is a JSON array of failure records. */
bd_status bd_verify_packing(const char* placement_json, double margin_override,
                            int* ok, char** report);

/* Greedy first-fit search: legs holds n (a, b) pairs (2*n doubles). found
 * receives 1/0; on success placement (bd_string_free) holds the placement
 * document. A search that exhausts its attempts is BD_OK with *found = 0. */
bd_status bd_pack_greedy(const double* legs, size_t n, double c, double d,
                         int attempts, uint64_t seed, double margin,
                         int* found, char** placement);

/* ---------- scenarios and plots ---------- */

/* Runs a named scenario ("weights", "capacities", "theorem-1.1",
 * "prop-1.4", "billiard-convergence", "packing"). report (bd_string_free)
 * receives the JSON document; overall_pass receives 1/0. */
bd_status bd_run_scenario(const char* name, char** report, int* overall_pass);

/* Renders labeled curves to SVG. curves_json is a JSON array of
 * {"label": s, "points": [[x, y], ...]} objects. */
bd_status bd_render_svg(const char* curves_json, char** svg);

#ifdef __cplusplus
}
#endif

#endif /* BIDISK_BIDISK_H */
