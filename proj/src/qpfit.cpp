#include "rectcount/qpfit.hpp"

#include <algorithm>
#include <numeric>
#include <sstream>
#include <stdexcept>

namespace rectcount::qpfit {

namespace {

Rational rat_zero() { return Rational(0); }

// n^i as an exact integer
Natural int_pow(std::size_t n, std::uint32_t i) {
  Natural v;
  mpz_ui_pow_ui(v.get_mpz_t(), static_cast<unsigned long>(n), i);
  return v;
}

}  // namespace

AnsatzBasis build_ansatz(std::uint32_t k) {
  if (k < 1) throw std::invalid_argument("build_ansatz: k >= 1");
  AnsatzBasis basis;
  basis.k = k;
  for (std::uint32_t j = 1; j <= k; ++j)
    for (std::uint32_t i = 0; i < k; ++i)
      for (std::uint32_t r = 0; r < j; ++r) basis.terms.push_back({i, j, r});
  return basis;
}

std::size_t lcm_upto(std::uint32_t k) {
  std::size_t l = 1;
  for (std::uint32_t i = 2; i <= k; ++i) l = std::lcm(l, static_cast<std::size_t>(i));
  return l;
}

std::size_t fit_window_size(std::uint32_t k) {
  const std::size_t unknowns = build_ansatz(k).terms.size();
  // Slack guards against spurious fits.  2 lcm(1..k) is affordable through
  // k = 6; beyond that the sequence generation cost dominates, so the slack
  // is pinned at the k = 6 level and the mandatory holdout pass carries the
  // rest of the burden.
  const std::size_t slack = 2 * lcm_upto(std::min<std::uint32_t>(k, 6));
  return unknowns + slack;
}

Rational QuasiPolynomial::evaluate(std::size_t n) const {
  const auto& poly = polys[n % period];
  Rational acc = rat_zero();
  Rational x(static_cast<unsigned long>(n));
  for (std::size_t i = poly.size(); i-- > 0;) acc = acc * x + poly[i];
  acc.canonicalize();
  return acc;
}

Rational evaluate_qp(const QuasiPolynomial& qp, std::size_t n) { return qp.evaluate(n); }

namespace {

QuasiPolynomial canonicalize(const AnsatzBasis& basis, const std::vector<Rational>& coeff,
                             std::size_t valid_from) {
  const std::size_t L = lcm_upto(basis.k);
  std::vector<std::vector<Rational>> polys(L, std::vector<Rational>(basis.k, rat_zero()));
  for (std::size_t t = 0; t < basis.terms.size(); ++t) {
    const auto& term = basis.terms[t];
    if (coeff[t] == 0) continue;
    for (std::size_t rho = 0; rho < L; ++rho)
      if (rho % term.modulus == term.residue) polys[rho][term.power] += coeff[t];
  }
  for (auto& p : polys)
    for (auto& c : p) c.canonicalize();

  // fold to the smallest period that preserves every residue polynomial
  std::size_t best = L;
  for (std::size_t d = 1; d < L; ++d) {
    if (L % d) continue;
    bool ok = true;
    for (std::size_t rho = 0; rho < L && ok; ++rho) ok = polys[rho] == polys[rho % d];
    if (ok) {
      best = d;
      break;
    }
  }
  QuasiPolynomial qp;
  qp.period = static_cast<std::uint32_t>(best);
  qp.polys.assign(polys.begin(), polys.begin() + static_cast<std::ptrdiff_t>(best));
  qp.valid_from = valid_from;
  // drop trailing zero coefficients
  for (auto& p : qp.polys) {
    while (p.size() > 1 && p.back() == 0) p.pop_back();
  }
  return qp;
}

}  // namespace

std::optional<FitResult> fit_window(const SeqTable& values, const AnsatzBasis& basis,
                                    std::size_t A, std::size_t B) {
  if (B < A || B - A + 1 < fit_window_size(basis.k))
    throw std::invalid_argument("fit_window: window smaller than the size policy");
  if (B > values.last_index() || values.values.empty())
    throw std::invalid_argument("fit_window: window runs past the table");

  const std::size_t rows = B - A + 1;
  const std::size_t cols = basis.terms.size();

  // dense augmented system over exact rationals
  std::vector<std::vector<Rational>> m(rows, std::vector<Rational>(cols + 1, rat_zero()));
  for (std::size_t r = 0; r < rows; ++r) {
    const std::size_t n = A + r;
    for (std::size_t t = 0; t < cols; ++t) {
      const auto& term = basis.terms[t];
      if (n % term.modulus == term.residue) m[r][t] = Rational(int_pow(n, term.power));
    }
    m[r][cols] = Rational(values.values[n]);
  }

  // Gaussian elimination, column order; free columns stay untouched.
  std::vector<std::ptrdiff_t> pivot_row_of_col(cols, -1);
  std::size_t rank = 0;
  for (std::size_t col = 0; col < cols && rank < rows; ++col) {
    std::size_t sel = rank;
    while (sel < rows && m[sel][col] == 0) ++sel;
    if (sel == rows) continue;
    std::swap(m[sel], m[rank]);
    const Rational pivot = m[rank][col];
    for (std::size_t c = col; c <= cols; ++c) m[rank][c] /= pivot;
    for (std::size_t r = 0; r < rows; ++r) {
      if (r == rank || m[r][col] == 0) continue;
      const Rational f = m[r][col];
      for (std::size_t c = col; c <= cols; ++c) m[r][c] -= f * m[rank][c];
    }
    pivot_row_of_col[col] = static_cast<std::ptrdiff_t>(rank);
    ++rank;
  }
  for (std::size_t r = rank; r < rows; ++r)
    if (m[r][cols] != 0) return std::nullopt;  // inconsistent

  std::vector<Rational> coeff(cols, rat_zero());  // free variables pinned to 0
  for (std::size_t col = 0; col < cols; ++col)
    if (pivot_row_of_col[col] >= 0)
      coeff[col] = m[static_cast<std::size_t>(pivot_row_of_col[col])][cols];

  FitResult fit;
  fit.basis = basis;
  fit.coefficients = std::move(coeff);
  fit.start = A;
  fit.end = B;
  fit.canonical = canonicalize(basis, fit.coefficients, A);
  return fit;
}

std::string FitResult::bracket_notation() const {
  // group solved coefficients by (modulus, power), skip all-zero brackets
  std::ostringstream out;
  bool first = true;
  for (std::uint32_t j = 1; j <= basis.k; ++j) {
    for (std::uint32_t i = basis.k; i-- > 0;) {
      std::vector<Rational> bracket(j, rat_zero());
      bool any = false;
      for (std::size_t t = 0; t < basis.terms.size(); ++t) {
        const auto& term = basis.terms[t];
        if (term.modulus == j && term.power == i && coefficients[t] != 0) {
          bracket[term.residue] = coefficients[t];
          any = true;
        }
      }
      if (!any) continue;
      if (!first) out << " + ";
      first = false;
      if (j == 1) {
        out << bracket[0].get_str();
      } else {
        out << "[";
        for (std::uint32_t r = 0; r < j; ++r) {
          if (r) out << ", ";
          out << bracket[r].get_str();
        }
        out << "]_" << j;
      }
      if (i == 1) out << " n";
      if (i > 1) out << " n^" << i;
    }
  }
  if (first) out << "0";
  return out.str();
}

MinStartResult fit_min_start(const SeqTable& values, std::uint32_t k) {
  const auto basis = build_ansatz(k);
  const std::size_t window = fit_window_size(k);
  if (values.values.size() < window)
    throw std::invalid_argument("fit_min_start: table shorter than one fit window");
  const std::size_t last = values.last_index();

  for (std::size_t A = 0; A + window - 1 <= last; ++A) {
    auto fit = fit_window(values, basis, A, A + window - 1);
    if (!fit) continue;
    bool holdout_ok = true;
    for (std::size_t n = A; n <= last && holdout_ok; ++n) {
      Rational v = fit->canonical.evaluate(n);
      holdout_ok = v.get_den() == 1 && v.get_num() == values.values[n];
    }
    if (holdout_ok) return {std::move(*fit), A};
  }
  throw std::runtime_error("fit_min_start: no feasible start within the table");
}

GfCheckReport rational_gf_check(const SeqTable& values, std::uint32_t k, std::uint32_t l) {
  if (k < 1) throw std::invalid_argument("rational_gf_check: k >= 1");
  // Q(x) = prod_{i=1..k} (1 - x^i) * prod_{i=2..l} (1 - x^i)
  std::vector<mpz_class> q{1};
  auto mul_factor = [&](std::uint32_t i) {
    std::vector<mpz_class> next(q.size() + i, 0);
    for (std::size_t t = 0; t < q.size(); ++t) {
      next[t] += q[t];
      next[t + i] -= q[t];
    }
    q = std::move(next);
  };
  for (std::uint32_t i = 1; i <= k; ++i) mul_factor(i);
  for (std::uint32_t i = 2; i <= l; ++i) mul_factor(i);

  const std::size_t deg_q = q.size() - 1;
  constexpr std::size_t kMargin = 40;
  if (values.values.size() < deg_q + kMargin)
    throw std::invalid_argument("rational_gf_check: need values to deg Q + 40");

  const std::size_t len = values.values.size();
  std::vector<mpz_class> num(len, 0);
  for (std::size_t n = 0; n < len; ++n)
    for (std::size_t j = 0; j <= std::min(deg_q, n); ++j) num[n] += q[j] * values.values[n - j];

  // locate the last nonzero coefficient
  std::size_t last_nonzero = 0;
  bool any = false;
  for (std::size_t n = 0; n < len; ++n)
    if (num[n] != 0) {
      last_nonzero = n;
      any = true;
    }

  GfCheckReport rep;
  rep.polynomial_within_range = !any || last_nonzero + kMargin < len;
  if (rep.polynomial_within_range && any) rep.degree = last_nonzero;
  if (!any) rep.degree = 0;
  num.resize(any ? last_nonzero + 1 : 1);
  rep.numerator = std::move(num);
  return rep;
}

}  // namespace rectcount::qpfit
