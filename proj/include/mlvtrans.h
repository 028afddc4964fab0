#ifndef MLVTRANS_H
#define MLVTRANS_H

/* Shared-library interface to the self-dual CSS transversal-gate toolkit.
 *
 * Every command returns an exit-style status code:
 *   0  success
 *   2  valid request that the mathematics does not support
 *      (e.g. no compatible symplectic basis exists for the code)
 *   1  invalid input or internal failure
 * and, when `out` is non-NULL, an owned result handle carrying a JSON
 * payload and a human-readable rendering. Free handles with
 * mlv_result_free. All strings returned from a handle stay valid until the
 * handle is freed. NULL may be passed for optional path arguments.
 */

#include <stddef.h>
#include <stdint.h>

#ifdef __cplusplus
extern "C" {
#endif

typedef struct mlv_result mlv_result;

/* Existence of a compatible symplectic basis for the code file. */
int mlv_check(const char* code_path, mlv_result** out);

/* Constructs and verifies a compatible basis; optionally writes a basis
 * file to output_path. */
int mlv_basis(const char* code_path, const char* output_path, mlv_result** out);

/* Synthesizes a transversal S/S-dagger layer realizing the target logical
 * signs ("all+", "all-", or a +- string of length k). basis_path may name a
 * basis file; otherwise the code's own basis (or a fresh construction) is
 * used. */
int mlv_phase(const char* code_path, const char* signs, const char* basis_path,
              mlv_result** out);

/* Builds a concatenated code from the ordered spec file (innermost code
 * first); verify != 0 also runs the multilevel conjugation checks with the
 * given number of sampled sign patterns. */
int mlv_concat(const char* spec_path, int verify, unsigned samples, uint64_t seed,
               mlv_result** out);

/* Shortest conversion word between two logical measurement labels (tokens
 * like "Z1 Z2") over k logical qubits. Status 2 when no word exists within
 * max_depth. */
int mlv_convert(unsigned k, const char* source, const char* target, unsigned max_depth,
                mlv_result** out);

/* Emits the code file for a catalog key (qhamming15, c422, c622, steane7,
 * hamming<m>); optionally writes it to output_path. */
int mlv_catalog(const char* name, const char* output_path, mlv_result** out);

/* Verifies a basis (from basis_path, or the code file's basis section)
 * against the code, including the all-H conjugation checks. */
int mlv_verify(const char* code_path, const char* basis_path, mlv_result** out);

/* Accessors. mlv_result_status mirrors the command's return code. */
int mlv_result_status(const mlv_result* r);
const char* mlv_result_json(const mlv_result* r);
const char* mlv_result_text(const mlv_result* r);
void mlv_result_free(mlv_result* r);

const char* mlv_version(void);

#ifdef __cplusplus
}
#endif

#endif /* MLVTRANS_H */
