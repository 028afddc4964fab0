#include "mlvtrans.h"

#include <new>
#include <string>

#include "mlv/commands.hpp"

struct mlv_result {
  int status = 1;
  std::string json;
  std::string text;
};

namespace {

const char* kVersion = "1.0.0";

std::string opt(const char* s) { return s ? std::string(s) : std::string(); }

int finish(mlv::CommandResult&& r, mlv_result** out) {
  int code = r.exit_code();
  if (out) {
    auto* handle = new (std::nothrow) mlv_result;
    if (!handle) return 1;
    handle->status = code;
    handle->json = r.payload.dump(2);
    handle->text = std::move(r.human_text);
    *out = handle;
  }
  return code;
}

template <typename Fn>
int guard(mlv_result** out, Fn&& fn) {
  try {
    return finish(fn(), out);
  } catch (...) {
    // The command layer maps its own failures; anything escaping here is a
    // resource-level problem.
    if (out) *out = nullptr;
    return 1;
  }
}

}  // namespace

extern "C" {

int mlv_check(const char* code_path, mlv_result** out) {
  return guard(out, [&] { return mlv::cmd_check(opt(code_path)); });
}

int mlv_basis(const char* code_path, const char* output_path, mlv_result** out) {
  return guard(out, [&] { return mlv::cmd_basis(opt(code_path), opt(output_path)); });
}

int mlv_phase(const char* code_path, const char* signs, const char* basis_path,
              mlv_result** out) {
  return guard(out,
               [&] { return mlv::cmd_phase(opt(code_path), opt(signs), opt(basis_path)); });
}

int mlv_concat(const char* spec_path, int verify, unsigned samples, uint64_t seed,
               mlv_result** out) {
  return guard(out, [&] { return mlv::cmd_concat(opt(spec_path), verify != 0, samples, seed); });
}

int mlv_convert(unsigned k, const char* source, const char* target, unsigned max_depth,
                mlv_result** out) {
  return guard(out,
               [&] { return mlv::cmd_convert(k, opt(source), opt(target), max_depth); });
}

int mlv_catalog(const char* name, const char* output_path, mlv_result** out) {
  return guard(out, [&] { return mlv::cmd_catalog(opt(name), opt(output_path)); });
}

int mlv_verify(const char* code_path, const char* basis_path, mlv_result** out) {
  return guard(out, [&] { return mlv::cmd_verify(opt(code_path), opt(basis_path)); });
}

int mlv_result_status(const mlv_result* r) { return r ? r->status : 1; }

const char* mlv_result_json(const mlv_result* r) { return r ? r->json.c_str() : ""; }

const char* mlv_result_text(const mlv_result* r) { return r ? r->text.c_str() : ""; }

void mlv_result_free(mlv_result* r) { delete r; }

const char* mlv_version(void) { return kVersion; }

}  // extern "C"
