#include "halfint.h"

#include <cstring>
#include <exception>
#include <string>
#include <vector>

#include "halfint/bounds.hpp"
#include "halfint/certify.hpp"
#include "halfint/character.hpp"
#include "halfint/errors.hpp"
#include "halfint/qexp_io.hpp"
#include "halfint/qexpansion.hpp"

using namespace halfint;

struct halfint_field {
  FieldPtr value;
};
struct halfint_char {
  DirichletCharacter value;
};
struct halfint_qexp {
  QExpansion value;
};
struct halfint_bound {
  SturmBound value;
};
struct halfint_cert {
  Certificate value;
};

namespace {

thread_local std::string tl_error;

void set_error(const std::string& msg) { tl_error = msg; }

halfint_status status_of(Errc code) {
  switch (code) {
    case Errc::NotMonic: return HALFINT_ERR_NOT_MONIC;
    case Errc::NotSquarefree: return HALFINT_ERR_NOT_SQUAREFREE;
    case Errc::FieldMismatch: return HALFINT_ERR_FIELD_MISMATCH;
    case Errc::DivisionByZero: return HALFINT_ERR_DIVISION_BY_ZERO;
    case Errc::Singular: return HALFINT_ERR_SINGULAR;
    case Errc::BadLevel: return HALFINT_ERR_BAD_LEVEL;
    case Errc::BadWeight: return HALFINT_ERR_BAD_WEIGHT;
    case Errc::RankDeficient: return HALFINT_ERR_RANK_DEFICIENT;
    case Errc::InsufficientRows: return HALFINT_ERR_INSUFFICIENT_ROWS;
    case Errc::ZeroLeadingCoefficient: return HALFINT_ERR_ZERO_LEADING_COEFF;
    case Errc::PrecisionTooSmall: return HALFINT_ERR_PRECISION;
    case Errc::NoPivotInWindow: return HALFINT_ERR_NO_PIVOT;
    case Errc::PivotViolation: return HALFINT_ERR_PIVOT_VIOLATION;
    case Errc::ShapeMismatch: return HALFINT_ERR_SHAPE;
    case Errc::EmptyWindow: return HALFINT_ERR_EMPTY_WINDOW;
    case Errc::ParseError: return HALFINT_ERR_PARSE;
    case Errc::FieldSpecError: return HALFINT_ERR_FIELD_SPEC;
    case Errc::BadArgument: return HALFINT_ERR_BAD_ARGUMENT;
    case Errc::IoError: return HALFINT_ERR_IO;
  }
  return HALFINT_ERR_INTERNAL;
}

template <typename Fn>
halfint_status guarded(Fn&& fn) {
  try {
    fn();
    return HALFINT_OK;
  } catch (const Error& e) {
    set_error(e.what());
    return status_of(e.code());
  } catch (const std::exception& e) {
    set_error(e.what());
    return HALFINT_ERR_INTERNAL;
  }
}

char* dup_string(const std::string& s) {
  char* out = static_cast<char*>(std::malloc(s.size() + 1));
  std::memcpy(out, s.c_str(), s.size() + 1);
  return out;
}

halfint_status require(bool ok, const char* what) {
  if (ok) return HALFINT_OK;
  set_error(std::string("null pointer: ") + what);
  return HALFINT_ERR_NULL;
}

#define REQUIRE(p)                                        \
  do {                                                    \
    halfint_status s_ = require((p) != nullptr, #p);      \
    if (s_ != HALFINT_OK) return s_;                      \
  } while (0)

halfint_verdict capi_verdict(Verdict v) {
  switch (v) {
    case Verdict::Certified: return HALFINT_VERDICT_CERTIFIED;
    case Verdict::Recovered: return HALFINT_VERDICT_RECOVERED;
    case Verdict::KernelComputed: return HALFINT_VERDICT_KERNEL_COMPUTED;
    case Verdict::NotInSpan: return HALFINT_VERDICT_NOT_IN_SPAN;
    case Verdict::NotInPlusSpace: return HALFINT_VERDICT_NOT_IN_PLUS_SPACE;
    case Verdict::ConsistentUpTo: return HALFINT_VERDICT_CONSISTENT_UP_TO;
  }
  return HALFINT_VERDICT_CERTIFIED;
}

}  // namespace

extern "C" {

const char* halfint_version(void) { return "0.1.0"; }

const char* halfint_last_error(void) { return tl_error.c_str(); }

void halfint_clear_last_error(void) { tl_error.clear(); }

void halfint_string_free(char* s) { std::free(s); }

/* ---- fields ---- */

halfint_status halfint_field_new(const char* minpoly_csv, const char* generator_name,
                                 halfint_field** out) {
  REQUIRE(minpoly_csv);
  REQUIRE(generator_name);
  REQUIRE(out);
  return guarded([&] {
    std::vector<Rational> coeffs;
    std::string s(minpoly_csv);
    size_t start = 0;
    while (true) {
      size_t comma = s.find(',', start);
      coeffs.push_back(parse_rational(
          comma == std::string::npos ? s.substr(start) : s.substr(start, comma - start)));
      if (comma == std::string::npos) break;
      start = comma + 1;
    }
    *out = new halfint_field{NumberField::create(std::move(coeffs), generator_name)};
  });
}

halfint_status halfint_field_rationals(halfint_field** out) {
  REQUIRE(out);
  return guarded([&] { *out = new halfint_field{NumberField::rationals()}; });
}

halfint_status halfint_field_degree(const halfint_field* f, int64_t* out) {
  REQUIRE(f);
  REQUIRE(out);
  *out = f->value->degree();
  return HALFINT_OK;
}

halfint_status halfint_field_spec(const halfint_field* f, char** out) {
  REQUIRE(f);
  REQUIRE(out);
  *out = dup_string(f->value->spec());
  return HALFINT_OK;
}

void halfint_field_free(halfint_field* f) { delete f; }

/* ---- characters ---- */

halfint_status halfint_char_parse(const char* spec, halfint_char** out) {
  REQUIRE(spec);
  REQUIRE(out);
  return guarded([&] { *out = new halfint_char{DirichletCharacter::parse(spec)}; });
}

halfint_status halfint_char_spec(const halfint_char* c, char** out) {
  REQUIRE(c);
  REQUIRE(out);
  *out = dup_string(c->value.spec());
  return HALFINT_OK;
}

halfint_status halfint_char_eval(const halfint_char* c, int64_t n, int* out) {
  REQUIRE(c);
  REQUIRE(out);
  *out = c->value.eval_int(n);
  return HALFINT_OK;
}

halfint_status halfint_char_modulus(const halfint_char* c, int64_t* out) {
  REQUIRE(c);
  REQUIRE(out);
  *out = c->value.modulus();
  return HALFINT_OK;
}

halfint_status halfint_char_order(const halfint_char* c, int* out) {
  REQUIRE(c);
  REQUIRE(out);
  *out = c->value.order();
  return HALFINT_OK;
}

halfint_status halfint_char_is_even(const halfint_char* c, int* out) {
  REQUIRE(c);
  REQUIRE(out);
  *out = c->value.is_even() ? 1 : 0;
  return HALFINT_OK;
}

halfint_status halfint_char_product(const halfint_char* a, const halfint_char* b,
                                    halfint_char** out) {
  REQUIRE(a);
  REQUIRE(b);
  REQUIRE(out);
  return guarded([&] { *out = new halfint_char{DirichletCharacter::product(a->value, b->value)}; });
}

halfint_status halfint_char_power(const halfint_char* c, int64_t e, halfint_char** out) {
  REQUIRE(c);
  REQUIRE(out);
  return guarded([&] { *out = new halfint_char{c->value.power(static_cast<long>(e))}; });
}

void halfint_char_free(halfint_char* c) { delete c; }

/* ---- q-expansions ---- */

halfint_status halfint_qexp_parse(const char* text, halfint_qexp** out) {
  REQUIRE(text);
  REQUIRE(out);
  return guarded([&] { *out = new halfint_qexp{parse_qexp(text)}; });
}

halfint_status halfint_qexp_to_string(const halfint_qexp* q, char** out) {
  REQUIRE(q);
  REQUIRE(out);
  return guarded([&] { *out = dup_string(write_qexp(q->value)); });
}

halfint_status halfint_qexp_read_file(const char* path, halfint_qexp** out) {
  REQUIRE(path);
  REQUIRE(out);
  return guarded([&] { *out = new halfint_qexp{read_qexp_file(path)}; });
}

halfint_status halfint_qexp_write_file(const halfint_qexp* q, const char* path) {
  REQUIRE(q);
  REQUIRE(path);
  return guarded([&] { write_qexp_file(q->value, path); });
}

halfint_status halfint_qexp_first(const halfint_qexp* q, int64_t* out) {
  REQUIRE(q);
  REQUIRE(out);
  *out = q->value.first();
  return HALFINT_OK;
}

halfint_status halfint_qexp_prec(const halfint_qexp* q, int64_t* out) {
  REQUIRE(q);
  REQUIRE(out);
  *out = q->value.prec();
  return HALFINT_OK;
}

halfint_status halfint_qexp_coeff(const halfint_qexp* q, int64_t n, char** out) {
  REQUIRE(q);
  REQUIRE(out);
  return guarded([&] { *out = dup_string(q->value.coeff(static_cast<long>(n)).to_csv()); });
}

halfint_status halfint_qexp_is_zero(const halfint_qexp* q, int* out) {
  REQUIRE(q);
  REQUIRE(out);
  *out = q->value.is_zero() ? 1 : 0;
  return HALFINT_OK;
}

halfint_status halfint_qexp_equal(const halfint_qexp* a, const halfint_qexp* b, int* out) {
  REQUIRE(a);
  REQUIRE(b);
  REQUIRE(out);
  *out = a->value == b->value ? 1 : 0;
  return HALFINT_OK;
}

halfint_status halfint_qexp_add(const halfint_qexp* a, const halfint_qexp* b, halfint_qexp** out) {
  REQUIRE(a);
  REQUIRE(b);
  REQUIRE(out);
  return guarded([&] { *out = new halfint_qexp{qx_add(a->value, b->value)}; });
}

halfint_status halfint_qexp_scale(const halfint_qexp* a, const char* scalar_csv,
                                  halfint_qexp** out) {
  REQUIRE(a);
  REQUIRE(scalar_csv);
  REQUIRE(out);
  return guarded([&] {
    FieldElement c = FieldElement::parse_csv(a->value.field(), scalar_csv);
    *out = new halfint_qexp{qx_scale(c, a->value)};
  });
}

halfint_status halfint_qexp_mul(const halfint_qexp* a, const halfint_qexp* b, halfint_qexp** out) {
  REQUIRE(a);
  REQUIRE(b);
  REQUIRE(out);
  return guarded([&] { *out = new halfint_qexp{qx_mul(a->value, b->value)}; });
}

halfint_status halfint_qexp_theta(int64_t prec, halfint_qexp** out) {
  REQUIRE(out);
  return guarded([&] { *out = new halfint_qexp{theta(static_cast<long>(prec))}; });
}

halfint_status halfint_qexp_theta1(int64_t prec, halfint_qexp** out) {
  REQUIRE(out);
  return guarded([&] { *out = new halfint_qexp{theta1(static_cast<long>(prec))}; });
}

halfint_status halfint_qexp_theta_twisted(const halfint_char* psi, int64_t prec,
                                          halfint_qexp** out) {
  REQUIRE(psi);
  REQUIRE(out);
  return guarded([&] { *out = new halfint_qexp{theta_twisted(psi->value, static_cast<long>(prec))}; });
}

halfint_status halfint_qexp_u(int64_t d, const halfint_qexp* q, halfint_qexp** out) {
  REQUIRE(q);
  REQUIRE(out);
  return guarded([&] { *out = new halfint_qexp{op_u(static_cast<long>(d), q->value)}; });
}

halfint_status halfint_qexp_v(int64_t d, const halfint_qexp* q, halfint_qexp** out) {
  REQUIRE(q);
  REQUIRE(out);
  return guarded([&] { *out = new halfint_qexp{op_v(static_cast<long>(d), q->value)}; });
}

halfint_status halfint_qexp_slice(const halfint_qexp* q, int64_t r, int64_t m, int check_via_uv,
                                  halfint_qexp** out) {
  REQUIRE(q);
  REQUIRE(out);
  return guarded([&] {
    *out = new halfint_qexp{
        residue_slice(q->value, static_cast<long>(r), static_cast<long>(m), check_via_uv != 0)};
  });
}

void halfint_qexp_free(halfint_qexp* q) { delete q; }

/* ---- bounds ---- */

halfint_status halfint_gamma0_index(int64_t n, int64_t* out) {
  REQUIRE(out);
  return guarded([&] { *out = gamma0_index(static_cast<long>(n)); });
}

halfint_status halfint_bound_sturm(int64_t k, int64_t n, int kohnen, halfint_bound** out) {
  REQUIRE(out);
  return guarded([&] {
    *out = new halfint_bound{kohnen ? kohnen_bound(static_cast<long>(k), static_cast<long>(n))
                                    : sturm_bound_halfint(static_cast<long>(k), static_cast<long>(n))};
  });
}

halfint_status halfint_bound_window(int64_t k, int64_t n, int64_t upto, halfint_bound** out) {
  REQUIRE(out);
  return guarded([&] {
    *out = new halfint_bound{
        window_bound(static_cast<long>(k), static_cast<long>(n), static_cast<long>(upto))};
  });
}

halfint_status halfint_bound_index(const halfint_bound* b, int64_t* out) {
  REQUIRE(b);
  REQUIRE(out);
  *out = b->value.index;
  return HALFINT_OK;
}

halfint_status halfint_bound_exact(const halfint_bound* b, char** out) {
  REQUIRE(b);
  REQUIRE(out);
  *out = dup_string(rational_to_string(b->value.bound));
  return HALFINT_OK;
}

halfint_status halfint_bound_floor(const halfint_bound* b, int64_t* out) {
  REQUIRE(b);
  REQUIRE(out);
  *out = b->value.floor;
  return HALFINT_OK;
}

void halfint_bound_free(halfint_bound* b) { delete b; }

halfint_status halfint_vanishing_test(const halfint_qexp* f, int64_t k, int64_t n,
                                      halfint_verdict* out_verdict, int64_t* out_index) {
  REQUIRE(f);
  REQUIRE(out_verdict);
  REQUIRE(out_index);
  return guarded([&] {
    VanishingResult r = vanishing_test(f->value, static_cast<long>(k), static_cast<long>(n));
    switch (r.verdict) {
      case VanishingVerdict::CertifiedZero: *out_verdict = HALFINT_VERDICT_CERTIFIED_ZERO; break;
      case VanishingVerdict::NonzeroAt: *out_verdict = HALFINT_VERDICT_NONZERO_AT; break;
      case VanishingVerdict::InsufficientPrecision:
        *out_verdict = HALFINT_VERDICT_INSUFFICIENT_PRECISION;
        break;
    }
    *out_index = r.index;
  });
}

/* ---- certification ---- */

halfint_status halfint_recover_cofactor(const halfint_qexp* product, const halfint_qexp* factor,
                                        halfint_qexp** out_cofactor, halfint_cert** out_cert) {
  REQUIRE(product);
  REQUIRE(factor);
  REQUIRE(out_cofactor);
  return guarded([&] {
    auto [h, cert] = recover_cofactor(product->value, factor->value);
    *out_cofactor = new halfint_qexp{std::move(h)};
    if (out_cert) *out_cert = new halfint_cert{std::move(cert)};
  });
}

halfint_status halfint_certify_span(const halfint_qexp* const* basis, size_t r,
                                    const halfint_qexp* target, const halfint_bound* bound,
                                    int allow_short_window, halfint_cert** out) {
  REQUIRE(basis);
  REQUIRE(target);
  REQUIRE(bound);
  REQUIRE(out);
  return guarded([&] {
    std::vector<QExpansion> b;
    b.reserve(r);
    for (size_t i = 0; i < r; ++i) {
      if (!basis[i]) fail(Errc::BadArgument, "null basis element");
      b.push_back(basis[i]->value);
    }
    SpanOptions opts;
    opts.allow_short_window = allow_short_window != 0;
    *out = new halfint_cert{certify_span(b, target->value, bound->value, opts)};
  });
}

halfint_status halfint_select_pivots(const halfint_qexp* f1, const halfint_qexp* f2, int64_t k,
                                     int64_t n, int64_t* out_m0, int64_t* out_n0) {
  REQUIRE(f1);
  REQUIRE(f2);
  REQUIRE(out_m0);
  REQUIRE(out_n0);
  return guarded([&] {
    PivotPair p = select_pivots(f1->value, f2->value, static_cast<long>(k), static_cast<long>(n));
    *out_m0 = p.m0;
    *out_n0 = p.n0;
  });
}

halfint_status halfint_certify_rank2(const halfint_qexp* f1, const halfint_qexp* f2, int64_t k,
                                     int64_t n, const char* value_m0, const char* value_n0,
                                     halfint_cert** out) {
  REQUIRE(f1);
  REQUIRE(f2);
  REQUIRE(value_m0);
  REQUIRE(value_n0);
  REQUIRE(out);
  return guarded([&] {
    FieldElement vm = FieldElement::parse_csv(f1->value.field(), value_m0);
    FieldElement vn = FieldElement::parse_csv(f1->value.field(), value_n0);
    *out = new halfint_cert{
        certify_rank2(f1->value, f2->value, static_cast<long>(k), static_cast<long>(n), vm, vn)};
  });
}

halfint_status halfint_certify_rank2_at(const halfint_qexp* f1, const halfint_qexp* f2, int64_t k,
                                        int64_t n, int64_t m0, int64_t n0, const char* value_m0,
                                        const char* value_n0, halfint_cert** out) {
  REQUIRE(f1);
  REQUIRE(f2);
  REQUIRE(value_m0);
  REQUIRE(value_n0);
  REQUIRE(out);
  return guarded([&] {
    FieldElement vm = FieldElement::parse_csv(f1->value.field(), value_m0);
    FieldElement vn = FieldElement::parse_csv(f1->value.field(), value_n0);
    *out = new halfint_cert{certify_rank2_at(f1->value, f2->value, static_cast<long>(k),
                                             static_cast<long>(n), static_cast<long>(m0),
                                             static_cast<long>(n0), vm, vn)};
  });
}

halfint_status halfint_kohnen_check(const halfint_qexp* f, int64_t k, int64_t n,
                                    halfint_cert** out) {
  REQUIRE(f);
  REQUIRE(out);
  return guarded([&] {
    *out = new halfint_cert{kohnen_check(f->value, static_cast<long>(k), static_cast<long>(n))};
  });
}

halfint_status halfint_subspace_kernel(const halfint_qexp* const* basis, size_t r,
                                       const int64_t* primes, size_t s,
                                       const halfint_qexp* const* images,
                                       const char* const* eigenvalue_csv, int64_t window_lo,
                                       int64_t window_hi, halfint_cert** out) {
  REQUIRE(basis);
  REQUIRE(primes);
  REQUIRE(images);
  REQUIRE(eigenvalue_csv);
  REQUIRE(out);
  return guarded([&] {
    EigenSliceInput input;
    for (size_t i = 0; i < r; ++i) {
      if (!basis[i]) fail(Errc::BadArgument, "null basis element");
      input.basis.push_back(basis[i]->value);
    }
    FieldPtr field = input.basis.empty() ? NumberField::rationals() : input.basis[0].field();
    for (size_t j = 0; j < s; ++j) {
      std::vector<QExpansion> imgs;
      for (size_t i = 0; i < r; ++i) {
        const halfint_qexp* g = images[j * r + i];
        if (!g) fail(Errc::BadArgument, "null image");
        imgs.push_back(g->value);
      }
      if (!eigenvalue_csv[j]) fail(Errc::BadArgument, "null eigenvalue");
      input.images.emplace_back(static_cast<long>(primes[j]), std::move(imgs));
      input.eigenvalues.emplace_back(static_cast<long>(primes[j]),
                                     FieldElement::parse_csv(field, eigenvalue_csv[j]));
    }
    *out = new halfint_cert{eigenspace_kernel(input, static_cast<long>(window_lo),
                                              static_cast<long>(window_hi))};
  });
}

/* ---- certificates ---- */

halfint_status halfint_cert_verdict(const halfint_cert* c, halfint_verdict* out) {
  REQUIRE(c);
  REQUIRE(out);
  *out = capi_verdict(c->value.verdict);
  return HALFINT_OK;
}

halfint_status halfint_cert_verdict_index(const halfint_cert* c, int64_t* out) {
  REQUIRE(c);
  REQUIRE(out);
  *out = c->value.verdict_index;
  return HALFINT_OK;
}

halfint_status halfint_cert_exit_code(const halfint_cert* c, int* out) {
  REQUIRE(c);
  REQUIRE(out);
  *out = c->value.exit_code();
  return HALFINT_OK;
}

halfint_status halfint_cert_report(const halfint_cert* c, char** out) {
  REQUIRE(c);
  REQUIRE(out);
  *out = dup_string(c->value.report());
  return HALFINT_OK;
}

halfint_status halfint_cert_machine(const halfint_cert* c, char** out) {
  REQUIRE(c);
  REQUIRE(out);
  *out = dup_string(c->value.machine());
  return HALFINT_OK;
}

halfint_status halfint_cert_lambda_count(const halfint_cert* c, size_t* out) {
  REQUIRE(c);
  REQUIRE(out);
  *out = c->value.lambdas.size();
  return HALFINT_OK;
}

halfint_status halfint_cert_lambda(const halfint_cert* c, size_t i, char** out) {
  REQUIRE(c);
  REQUIRE(out);
  if (i >= c->value.lambdas.size()) {
    set_error("lambda index out of range");
    return HALFINT_ERR_BAD_ARGUMENT;
  }
  *out = dup_string(c->value.lambdas[i].to_csv());
  return HALFINT_OK;
}

halfint_status halfint_cert_kernel_dim(const halfint_cert* c, size_t* out) {
  REQUIRE(c);
  REQUIRE(out);
  *out = c->value.kernel_basis.size();
  return HALFINT_OK;
}

halfint_status halfint_cert_kernel_entry(const halfint_cert* c, size_t vec, size_t pos,
                                         char** out) {
  REQUIRE(c);
  REQUIRE(out);
  if (vec >= c->value.kernel_basis.size() || pos >= c->value.kernel_basis[vec].size()) {
    set_error("kernel entry out of range");
    return HALFINT_ERR_BAD_ARGUMENT;
  }
  *out = dup_string(c->value.kernel_basis[vec][pos].to_csv());
  return HALFINT_OK;
}

halfint_status halfint_cert_reconstruction(const halfint_cert* c, halfint_qexp** out) {
  REQUIRE(c);
  REQUIRE(out);
  if (!c->value.reconstruction) {
    set_error("certificate carries no reconstruction");
    return HALFINT_ERR_BAD_ARGUMENT;
  }
  *out = new halfint_qexp{*c->value.reconstruction};
  return HALFINT_OK;
}

void halfint_cert_free(halfint_cert* c) { delete c; }

}  // extern "C"
