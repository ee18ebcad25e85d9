#include "halfint/certify.hpp"

#include <algorithm>
#include <sstream>

#include "halfint/errors.hpp"
#include "halfint/matrix.hpp"

namespace halfint {

const char* cert_kind_name(CertKind k) {
  switch (k) {
    case CertKind::Span: return "span";
    case CertKind::Recovery: return "recovery";
    case CertKind::Kohnen: return "kohnen";
    case CertKind::Kernel: return "kernel";
  }
  return "?";
}

const char* verdict_name(Verdict v) {
  switch (v) {
    case Verdict::Certified: return "Certified";
    case Verdict::Recovered: return "Recovered";
    case Verdict::KernelComputed: return "KernelComputed";
    case Verdict::NotInSpan: return "NotInSpan";
    case Verdict::NotInPlusSpace: return "NotInPlusSpace";
    case Verdict::ConsistentUpTo: return "ConsistentUpTo";
  }
  return "?";
}

int verdict_exit_code(Verdict v) {
  switch (v) {
    case Verdict::Certified:
    case Verdict::Recovered:
    case Verdict::KernelComputed:
      return 0;
    case Verdict::NotInSpan:
    case Verdict::NotInPlusSpace:
      return 1;
    case Verdict::ConsistentUpTo:
      return 2;
  }
  return 3;
}

namespace {

const char* kModularityNote = "conditional on the supplied expansions being modular forms of the stated weight, level and character";

std::string join_longs(const std::vector<long>& v, const char* sep) {
  std::ostringstream os;
  for (size_t i = 0; i < v.size(); ++i) {
    if (i) os << sep;
    os << v[i];
  }
  return os.str();
}

std::string bound_machine_line(const SturmBound& b) {
  std::ostringstream os;
  os << b.kind_name() << " k=" << b.k << " N=" << b.level << " index=" << b.index
     << " exact=" << rational_to_string(b.bound) << " floor=" << b.floor;
  return os.str();
}

std::string bound_human_line(const SturmBound& b) {
  std::ostringstream os;
  if (b.kind == SturmBound::Kind::Window) {
    os << "window bound for k=" << b.k << ", N=" << b.level << ": rows 1.." << b.floor
       << " (caller-chosen cutoff)";
    return os.str();
  }
  long group_level = b.kind == SturmBound::Kind::Kohnen ? 4 * b.level : b.level;
  os << b.kind_name() << " bound for k=" << b.k << ", N=" << b.level
     << ": index [SL2(Z):Gamma0(" << group_level << ")] = " << b.index
     << ", B = " << rational_to_string(b.bound) << ", floor(B) = " << b.floor;
  return os.str();
}

FieldElement coerce_element(const FieldElement& x, const FieldPtr& field) {
  if (same_field(x.field(), field)) return x;
  if (x.field()->degree() != 1)
    fail(Errc::FieldMismatch, "cannot coerce " + x.field()->spec() + " into " + field->spec());
  return FieldElement::from_rational(field, x.coeffs()[0]);
}

std::vector<long> forbidden_residues_for(long k) {
  // n = 2 and n = (-1)^{(k+1)/2} mod 4.
  long sign_residue = (k % 4 == 3) ? 1 : 3;
  std::vector<long> r{2, sign_residue};
  std::sort(r.begin(), r.end());
  return r;
}

}  // namespace

std::string Certificate::machine() const {
  std::ostringstream os;
  os << "halfint-certificate v1\n";
  os << "kind " << cert_kind_name(kind) << '\n';
  os << "verdict " << verdict_name(verdict) << '\n';
  if (verdict_index >= 0) os << "verdict-index " << verdict_index << '\n';
  if (field) os << "field " << field->spec() << '\n';
  if (bound) os << "bound " << bound_machine_line(*bound) << '\n';
  if (!lambdas.empty()) {
    os << "lambdas " << lambdas.size() << '\n';
    for (const auto& l : lambdas) os << "lambda " << l.to_csv() << '\n';
  }
  if (!pivot_rows.empty()) os << "pivot-rows " << join_longs(pivot_rows, ",") << '\n';
  os << "residual-rows " << residual_checked_rows << '\n';
  if (!forbidden_residues.empty())
    os << "forbidden-residues " << join_longs(forbidden_residues, ",") << '\n';
  if (kind == CertKind::Recovery) os << "induction-depth " << induction_depth << '\n';
  if (kind == CertKind::Kernel) {
    os << "kernel-dim " << kernel_basis.size() << '\n';
    for (const auto& vec : kernel_basis) {
      os << "kernel-vector ";
      for (size_t i = 0; i < vec.size(); ++i) {
        if (i) os << ';';
        os << vec[i].to_csv();
      }
      os << '\n';
    }
  }
  for (const auto& n : notes) os << "note " << n << '\n';
  os << "end\n";
  return os.str();
}

std::string Certificate::report() const {
  std::ostringstream os;
  os << "certificate: " << cert_kind_name(kind) << '\n';
  os << "verdict: " << verdict_name(verdict);
  switch (verdict) {
    case Verdict::NotInSpan:
    case Verdict::NotInPlusSpace:
      os << " at n = " << verdict_index;
      break;
    case Verdict::ConsistentUpTo:
      os << " n = " << verdict_index;
      break;
    default:
      break;
  }
  os << '\n';
  if (bound) os << "bound: " << bound_human_line(*bound) << '\n';
  if (field) os << "field: " << field->spec() << '\n';
  for (size_t i = 0; i < lambdas.size(); ++i)
    os << "lambda[" << (i + 1) << "] = " << lambdas[i].to_poly_string() << '\n';
  if (!pivot_rows.empty()) os << "pivot rows: " << join_longs(pivot_rows, ", ") << '\n';
  os << "residual checked rows: " << residual_checked_rows << '\n';
  if (!forbidden_residues.empty())
    os << "forbidden residues mod 4: " << join_longs(forbidden_residues, ", ") << '\n';
  if (kind == CertKind::Recovery) os << "induction depth: " << induction_depth << '\n';
  if (kind == CertKind::Kernel) {
    os << "kernel dimension: " << kernel_basis.size() << '\n';
    for (size_t i = 0; i < kernel_basis.size(); ++i) {
      os << "kernel[" << (i + 1) << "] = (";
      for (size_t j = 0; j < kernel_basis[i].size(); ++j) {
        if (j) os << ", ";
        os << kernel_basis[i][j].to_poly_string();
      }
      os << ")\n";
    }
  }
  for (const auto& n : notes) os << "note: " << n << '\n';
  return os.str();
}

std::pair<QExpansion, Certificate> recover_cofactor(const QExpansion& product,
                                                    const QExpansion& factor) {
  FieldPtr field = product.field();
  QExpansion fac = factor;
  QExpansion prod = product;
  if (!same_field(field, factor.field())) {
    if (factor.field()->degree() == 1) {
      fac = coerce_to_field(factor, field);
    } else if (field->degree() == 1) {
      field = factor.field();
      prod = coerce_to_field(product, field);
    } else {
      fail(Errc::FieldMismatch, "product and factor live in different fields");
    }
  }
  fac = fac.normalized();
  if (fac.stored_coeffs().empty())
    fail(Errc::ZeroLeadingCoefficient, "factor is zero to its precision");
  const long n0 = fac.first();
  const FieldElement a0 = fac.coeff(n0);

  // Meta of the quotient: weights subtract, level stays with the product,
  // characters divide (order <= 2, so division is multiplication).
  std::optional<FormMeta> meta;
  if (prod.meta() && fac.meta() && prod.meta()->weight_num > fac.meta()->weight_num) {
    FormMeta m{prod.meta()->weight_num - fac.meta()->weight_num, prod.meta()->level,
               DirichletCharacter::product(prod.meta()->character, fac.meta()->character)};
    try {
      check_meta(m);
      meta = m;
    } catch (const Error&) {
      meta = std::nullopt;
    }
  }

  Certificate cert;
  cert.kind = CertKind::Recovery;
  cert.verdict = Verdict::Recovered;
  cert.field = field;

  QExpansion cnorm = prod.normalized();
  if (cnorm.stored_coeffs().empty()) {
    long prec_h = cnorm.prec() - n0;
    if (prec_h < 0) fail(Errc::PrecisionTooSmall, "product window shorter than the factor's first term");
    QExpansion h = QExpansion::zero(field, prec_h, meta);
    cert.induction_depth = 0;
    cert.residual_checked_rows = prec_h;
    cert.notes.push_back("product vanishes to precision; cofactor is zero on the provable window");
    cert.reconstruction = h;
    return {h, cert};
  }

  if (cnorm.first() < n0)
    fail(Errc::BadArgument, "product has a nonzero term below the factor's first exponent; no cofactor exists");
  const long n1 = cnorm.first() - n0;
  const long prec_h = std::min(cnorm.prec() - n0, fac.prec() - n0 + n1);
  if (prec_h <= n1)
    fail(Errc::PrecisionTooSmall, "product window shorter than the factor's first term allows");

  std::vector<FieldElement> b;
  b.reserve(prec_h - n1);
  for (long m = n1; m < prec_h; ++m) {
    FieldElement acc = cnorm.coeff(n0 + m);
    for (long i = 1; i <= m - n1; ++i) acc = acc - fac.coeff(n0 + i) * b[m - i - n1];
    b.push_back(acc / a0);
  }
  QExpansion h(field, n1, prec_h, std::move(b), meta);
  cert.induction_depth = prec_h - n1;
  cert.residual_checked_rows = prec_h - n1;
  cert.reconstruction = h;
  return {h, cert};
}

Certificate certify_span(const std::vector<QExpansion>& basis, const QExpansion& target,
                         const SturmBound& bound, const SpanOptions& opts) {
  const long r = static_cast<long>(basis.size());
  if (r == 0) fail(Errc::BadArgument, "empty basis");
  FieldPtr field = basis[0].field();
  for (const auto& f : basis)
    if (!same_field(f.field(), field)) fail(Errc::FieldMismatch, "basis elements live in different fields");
  QExpansion tgt = coerce_to_field(target, field);

  const long bfloor = bound.floor;
  if (bfloor < r)
    fail(Errc::InsufficientRows, "floor(B) = " + std::to_string(bfloor) +
                                     " is below the basis size r = " + std::to_string(r));
  long min_basis_prec = basis[0].prec();
  for (const auto& f : basis) min_basis_prec = std::min(min_basis_prec, f.prec());
  const long window = std::min({bfloor, min_basis_prec - 1, tgt.prec() - 1});
  if (window < r)
    fail(Errc::InsufficientRows, "only rows 1.." + std::to_string(window) +
                                     " are available; need at least r = " + std::to_string(r));
  if (window < bfloor && !opts.allow_short_window)
    fail(Errc::InsufficientRows,
         "rows 1.." + std::to_string(window) + " available but the bound needs 1.." +
             std::to_string(bfloor) + "; pass allow_short_window to accept a weaker verdict");

  // Lexicographically first set of r independent rows, via a running echelon.
  std::vector<long> pivot_rows;
  std::vector<std::vector<FieldElement>> echelon;
  std::vector<long> lead_cols;
  for (long n = 1; n <= window && static_cast<long>(pivot_rows.size()) < r; ++n) {
    std::vector<FieldElement> row;
    row.reserve(r);
    for (const auto& f : basis) row.push_back(f.coeff(n));
    for (size_t e = 0; e < echelon.size(); ++e) {
      const FieldElement& c = row[lead_cols[e]];
      if (c.is_zero()) continue;
      FieldElement factor = c;
      for (long j = 0; j < r; ++j) row[j] = row[j] - factor * echelon[e][j];
    }
    long lead = -1;
    for (long j = 0; j < r; ++j) {
      if (!row[j].is_zero()) {
        lead = j;
        break;
      }
    }
    if (lead < 0) continue;
    FieldElement inv = row[lead].inverse();
    for (long j = 0; j < r; ++j) row[j] = row[j] * inv;
    echelon.push_back(std::move(row));
    lead_cols.push_back(lead);
    pivot_rows.push_back(n);
  }
  if (static_cast<long>(pivot_rows.size()) < r) {
    std::string scope = window == bfloor
                            ? "within the full bound window; the inputs cannot be a linearly "
                              "independent basis of forms at the stated weight and level"
                            : "within the supplied window";
    fail(Errc::RankDeficient,
         "rank " + std::to_string(pivot_rows.size()) + " < r = " + std::to_string(r) + " " + scope);
  }

  std::vector<FieldElement> entries;
  std::vector<FieldElement> rhs;
  entries.reserve(r * r);
  for (long i = 0; i < r; ++i) {
    for (const auto& f : basis) entries.push_back(f.coeff(pivot_rows[i]));
    rhs.push_back(tgt.coeff(pivot_rows[i]));
  }
  ExactMatrix c(field, r, r, std::move(entries));
  std::vector<FieldElement> lambdas = mat_solve(c, rhs);

  const long residual_window = std::min(min_basis_prec, tgt.prec()) - 1;
  long violating = -1;
  for (long n = 1; n <= residual_window; ++n) {
    FieldElement acc = FieldElement::zero(field);
    for (long i = 0; i < r; ++i) acc = acc + lambdas[i] * basis[i].coeff(n);
    if (acc != tgt.coeff(n)) {
      violating = n;
      break;
    }
  }

  QExpansion reconstruction = qx_scale(lambdas[0], basis[0]);
  for (long i = 1; i < r; ++i)
    reconstruction = qx_add(reconstruction, qx_scale(lambdas[i], basis[i]));

  Certificate cert;
  cert.kind = CertKind::Span;
  cert.field = field;
  cert.lambdas = std::move(lambdas);
  cert.pivot_rows = pivot_rows;
  cert.residual_checked_rows = residual_window;
  cert.bound = bound;
  cert.reconstruction = reconstruction;
  if (violating >= 0) {
    cert.verdict = Verdict::NotInSpan;
    cert.verdict_index = violating;
    cert.notes.push_back("lambda is the unique candidate from the pivot rows; the residual fails at the reported index");
  } else if (window == bfloor) {
    cert.verdict = Verdict::Certified;
    cert.notes.push_back(kModularityNote);
  } else {
    cert.verdict = Verdict::ConsistentUpTo;
    cert.verdict_index = residual_window;
    cert.notes.push_back("window 1.." + std::to_string(window) + " is short of floor(B) = " +
                         std::to_string(bfloor) + "; accepted by caller");
    cert.notes.push_back(kModularityNote);
  }
  return cert;
}

PivotPair select_pivots(const QExpansion& f1, const QExpansion& f2, long k, long n) {
  if (!same_field(f1.field(), f2.field()))
    fail(Errc::FieldMismatch, "the two basis elements live in different fields");
  SturmBound b = kohnen_bound(k, n);
  const long limit = std::min({f1.prec() - 1, f2.prec() - 1, b.floor});
  const long n0 = f1.order();
  if (n0 >= f1.prec())
    fail(Errc::NoPivotInWindow, "no n0: f1 is zero to its precision");
  if (n0 > limit)
    fail(Errc::NoPivotInWindow, "no n0 <= " + std::to_string(limit) +
                                    ": the first nonzero coefficient of f1 sits at " +
                                    std::to_string(n0));
  const std::vector<long> residues = forbidden_residues_for(k);
  bool saw_f2_nonzero = false;
  for (long m = 1; m <= limit; ++m) {
    if (std::find(residues.begin(), residues.end(), m % 4) == residues.end()) continue;
    if (f2.coeff(m).is_zero()) continue;
    saw_f2_nonzero = true;
    if (f1.coeff(m).is_zero()) return {m, n0};
  }
  if (saw_f2_nonzero)
    fail(Errc::NoPivotInWindow,
         "no m0 <= " + std::to_string(limit) +
             ": f1 is nonzero at every candidate index where f2 is nonzero");
  fail(Errc::NoPivotInWindow,
       "no m0 <= " + std::to_string(limit) +
           ": f2 vanishes at every index in the forbidden residue classes {" +
           join_longs(residues, ",") + "} mod 4");
}

Certificate certify_rank2_at(const QExpansion& f1, const QExpansion& f2, long k, long n, long m0,
                             long n0, const FieldElement& value_m0, const FieldElement& value_n0) {
  if (!same_field(f1.field(), f2.field()))
    fail(Errc::FieldMismatch, "the two basis elements live in different fields");
  if (m0 >= f1.prec() || m0 >= f2.prec() || n0 >= f1.prec() || n0 >= f2.prec())
    fail(Errc::PrecisionTooSmall, "pivot index beyond the known window");
  FieldPtr field = f1.field();
  if (!f1.coeff(m0).is_zero())
    fail(Errc::PivotViolation, "a1(m0) != 0 at m0 = " + std::to_string(m0));
  if (f2.coeff(m0).is_zero())
    fail(Errc::PivotViolation, "a2(m0) = 0 at m0 = " + std::to_string(m0));
  if (f1.coeff(n0).is_zero())
    fail(Errc::PivotViolation, "a1(n0) = 0 at n0 = " + std::to_string(n0));

  FieldElement vm = coerce_element(value_m0, field);
  FieldElement vn = coerce_element(value_n0, field);
  FieldElement lambda2 = vm / f2.coeff(m0);
  FieldElement lambda1 = (vn - lambda2 * f2.coeff(n0)) / f1.coeff(n0);

  Certificate cert;
  cert.kind = CertKind::Span;
  cert.verdict = Verdict::Certified;
  cert.field = field;
  cert.lambdas = {lambda1, lambda2};
  cert.pivot_rows = {m0, n0};
  cert.residual_checked_rows = 2;
  cert.bound = kohnen_bound(k, n);
  cert.reconstruction = qx_add(qx_scale(lambda1, f1), qx_scale(lambda2, f2));
  cert.notes.push_back("rank-2 triangular path; residual limited to the two pivot rows");
  cert.notes.push_back(kModularityNote);
  return cert;
}

Certificate certify_rank2(const QExpansion& f1, const QExpansion& f2, long k, long n,
                          const FieldElement& value_m0, const FieldElement& value_n0) {
  PivotPair p = select_pivots(f1, f2, k, n);
  return certify_rank2_at(f1, f2, k, n, p.m0, p.n0, value_m0, value_n0);
}

Certificate kohnen_check(const QExpansion& f, long k, long n) {
  SturmBound b = kohnen_bound(k, n);
  const std::vector<long> residues = forbidden_residues_for(k);
  const long limit = std::min(f.prec() - 1, b.floor);

  long violation = -1;
  for (long m = 1; m <= limit; ++m) {
    if (std::find(residues.begin(), residues.end(), m % 4) == residues.end()) continue;
    if (!f.coeff(m).is_zero()) {
      violation = m;
      break;
    }
  }

  // The even forbidden class, recomputed through the U/V composite; the two
  // routes must agree wherever both are defined.
  QExpansion via_uv = qx_sub(op_v(2, op_u(2, f)), op_v(4, op_u(4, f)));
  QExpansion direct = residue_slice(f, 2, 4);
  if (!agree_below(direct, via_uv, common_prec(direct, via_uv)))
    fail(Errc::BadArgument, "internal inconsistency: U/V composite disagrees with the residue filter");

  Certificate cert;
  cert.kind = CertKind::Kohnen;
  cert.field = f.field();
  cert.bound = b;
  cert.forbidden_residues = residues;
  cert.residual_checked_rows = limit;
  cert.notes.push_back("n = 2 (mod 4) scan cross-checked via the V(2)U(2) - V(4)U(4) composite");
  if (violation >= 0) {
    cert.verdict = Verdict::NotInPlusSpace;
    cert.verdict_index = violation;
  } else if (f.prec() > b.floor) {
    cert.verdict = Verdict::Certified;
    cert.notes.push_back(kModularityNote);
  } else {
    cert.verdict = Verdict::ConsistentUpTo;
    cert.verdict_index = f.prec() - 1;
    cert.notes.push_back("window ends at n = " + std::to_string(f.prec() - 1) +
                         ", short of floor(B') = " + std::to_string(b.floor));
    cert.notes.push_back(kModularityNote);
  }
  return cert;
}

Certificate eigenspace_kernel(const EigenSliceInput& input, long window_lo, long window_hi) {
  const long r = static_cast<long>(input.basis.size());
  if (r == 0) fail(Errc::ShapeMismatch, "empty basis");
  if (input.images.empty()) fail(Errc::ShapeMismatch, "no operator images supplied");
  if (input.images.size() != input.eigenvalues.size())
    fail(Errc::ShapeMismatch, "images and eigenvalues list different prime counts");

  FieldPtr field = input.basis[0].field();
  long prec = input.basis[0].prec();
  for (const auto& f : input.basis) {
    if (!same_field(f.field(), field)) fail(Errc::ShapeMismatch, "basis elements live in different fields");
    prec = std::min(prec, f.prec());
  }

  // Primes sorted ascending for a canonical row order.
  std::vector<size_t> order(input.images.size());
  for (size_t j = 0; j < order.size(); ++j) order[j] = j;
  std::sort(order.begin(), order.end(), [&](size_t a, size_t b) {
    return input.images[a].first < input.images[b].first;
  });
  std::vector<long> primes;
  for (size_t j : order) {
    const auto& [p, imgs] = input.images[j];
    if (input.eigenvalues[j].first != p)
      fail(Errc::ShapeMismatch, "images and eigenvalues disagree on the prime at position " +
                                    std::to_string(j));
    if (!primes.empty() && primes.back() == p) fail(Errc::ShapeMismatch, "duplicate prime");
    primes.push_back(p);
    if (static_cast<long>(imgs.size()) != r)
      fail(Errc::ShapeMismatch, "prime " + std::to_string(p) + " carries " +
                                    std::to_string(imgs.size()) + " images for a basis of size " +
                                    std::to_string(r));
    for (const auto& g : imgs) {
      if (!same_field(g.field(), field)) fail(Errc::ShapeMismatch, "image in a different field");
      prec = std::min(prec, g.prec());
    }
    if (!same_field(input.eigenvalues[j].second.field(), field))
      fail(Errc::ShapeMismatch, "eigenvalue in a different field");
  }

  if (window_lo > window_hi) fail(Errc::EmptyWindow, "window is empty");
  if (window_lo < 0 || window_hi >= prec)
    fail(Errc::EmptyWindow, "window [" + std::to_string(window_lo) + ", " +
                                std::to_string(window_hi) + "] exceeds the common precision " +
                                std::to_string(prec));

  std::vector<FieldElement> entries;
  const long rows_per_prime = window_hi - window_lo + 1;
  entries.reserve(input.images.size() * rows_per_prime * r);
  for (size_t j : order) {
    const auto& imgs = input.images[j].second;
    const FieldElement& lambda = input.eigenvalues[j].second;
    for (long m = window_lo; m <= window_hi; ++m)
      for (long i = 0; i < r; ++i)
        entries.push_back(imgs[i].coeff(m) - lambda * input.basis[i].coeff(m));
  }
  ExactMatrix system(field, static_cast<long>(input.images.size()) * rows_per_prime, r,
                     std::move(entries));
  Certificate cert;
  cert.kind = CertKind::Kernel;
  cert.verdict = Verdict::KernelComputed;
  cert.field = field;
  cert.kernel_basis = mat_nullspace(system);
  cert.residual_checked_rows = system.rows();
  cert.notes.push_back("primes: " + join_longs(primes, ",") + "; window " +
                       std::to_string(window_lo) + ".." + std::to_string(window_hi));
  return cert;
}

}  // namespace halfint
