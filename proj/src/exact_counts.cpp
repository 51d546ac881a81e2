#include "rsdl/exact_counts.hpp"

#include <cmath>
#include <numeric>

#include "rsdl/parallel.hpp"

namespace rsdl {

namespace {

std::uint64_t ipow(std::uint64_t base, std::size_t n) {
  std::uint64_t v = 1;
  for (std::size_t i = 0; i < n; ++i) v *= base;
  return v;
}

double dpow(double base, std::size_t n) { return std::pow(base, static_cast<double>(n)); }

std::uint64_t choose_u64(std::uint64_t n, std::uint64_t r) {
  if (r > n) return 0;
  std::uint64_t v = 1;
  for (std::uint64_t i = 1; i <= r; ++i) v = v * (n - r + i) / i;
  return v;
}

double dchoose(std::uint64_t n, std::uint64_t r) {
  if (r > n) return 0;
  double v = 1;
  for (std::uint64_t i = 1; i <= r; ++i) v = v * static_cast<double>(n - r + i) / static_cast<double>(i);
  return v;
}

// Calls fn(subset) for every r-subset of `points` in lexicographic index order.
template <class Fn>
void for_each_subset(std::span<const Elem> points, std::size_t r, Fn&& fn) {
  const std::size_t n = points.size();
  if (r > n) return;
  std::vector<std::size_t> idx(r);
  std::iota(idx.begin(), idx.end(), 0);
  std::vector<Elem> subset(r);
  while (true) {
    for (std::size_t i = 0; i < r; ++i) subset[i] = points[idx[i]];
    fn(std::span<const Elem>(subset));
    std::size_t i = r;
    while (i > 0 && idx[i - 1] == n - r + i - 1) --i;
    if (i == 0) return;
    ++idx[i - 1];
    for (std::size_t j = i; j < r; ++j) idx[j] = idx[j - 1] + 1;
  }
}

}  // namespace

Poly normalize_for_counting(const Poly& f, std::size_t k) {
  const auto d = f.degree();
  if (!d || *d < k) return Poly(f.field());
  return f.monic().without_terms_below(k);
}

long excess_degree(const Poly& normalized, std::size_t k) {
  const auto d = normalized.degree();
  if (!d) return -static_cast<long>(k);
  return static_cast<long>(*d) - static_cast<long>(k);
}

std::vector<std::uint64_t> root_count_histogram(const Poly& f_in, std::size_t k, std::span<const Elem> domain,
                                                const Exec& exec) {
  const Field& F = f_in.field();
  const Poly f = normalize_for_counting(f_in, k);
  const std::size_t n = domain.size();
  const double work = dpow(F.q(), k) * static_cast<double>(n);
  require_budget(work, exec, "root-count histogram");

  const std::uint32_t p = F.p();
  const std::size_t digits = k * F.e();
  const std::uint64_t total = ipow(F.q(), k);

  // delta[d][i]: change in (f+g)(domain[i]) when p-ary digit d of g steps by one.
  std::vector<std::vector<Elem>> delta(digits, std::vector<Elem>(n));
  for (std::size_t j = 0; j < k; ++j) {
    for (std::uint32_t t = 0; t < F.e(); ++t) {
      const Elem b = F.basis(t);
      for (std::size_t i = 0; i < n; ++i) delta[j * F.e() + t][i] = F.mul(b, F.pow(domain[i], j));
    }
  }
  std::vector<Elem> base(n);
  for (std::size_t i = 0; i < n; ++i) base[i] = f.eval(domain[i]);

  using Hist = std::vector<std::uint64_t>;
  auto chunks = map_chunks<Hist>(total, exec.workers, [&](std::uint64_t begin, std::uint64_t end) {
    Hist hist(n + 1, 0);
    std::vector<std::uint32_t> digit(digits, 0);
    std::vector<Elem> value = base;
    std::uint64_t v = begin;
    for (std::size_t d = 0; d < digits; ++d) {
      digit[d] = static_cast<std::uint32_t>(v % p);
      v /= p;
      for (std::uint32_t s = 0; s < digit[d]; ++s)
        for (std::size_t i = 0; i < n; ++i) value[i] = F.add(value[i], delta[d][i]);
    }
    for (std::uint64_t g = begin; g < end; ++g) {
      std::size_t zeros = 0;
      for (std::size_t i = 0; i < n; ++i) zeros += value[i] == 0;
      ++hist[zeros];
      for (std::size_t d = 0; d < digits; ++d) {
        for (std::size_t i = 0; i < n; ++i) value[i] = F.add(value[i], delta[d][i]);
        if (++digit[d] < p) break;
        digit[d] = 0;
      }
    }
    return hist;
  });

  Hist hist(n + 1, 0);
  for (const auto& c : chunks)
    for (std::size_t t = 0; t <= n; ++t) hist[t] += c[t];
  return hist;
}

std::vector<std::uint64_t> count_N_all(const Poly& f, std::size_t k, const Exec& exec) {
  const auto points = f.field().elements();
  return root_count_histogram(f, k, points, exec);
}

std::uint64_t count_N(const Poly& f, std::size_t k, std::size_t r, const Exec& exec) {
  const auto hist = count_N_all(f, k, exec);
  return r < hist.size() ? hist[r] : 0;
}

std::uint64_t count_vanishing_pairs(const Poly& f_in, std::size_t k, std::size_t r, std::span<const Elem> points,
                                    const Exec& exec) {
  const Field& F = f_in.field();
  const Poly f = normalize_for_counting(f_in, k);
  require_budget(dchoose(points.size(), r) * static_cast<double>(r * r + 1), exec, "subset enumeration");
  std::uint64_t total = 0;
  for_each_subset(points, r, [&](std::span<const Elem> subset) {
    if (r <= k) {
      // The r x k Vandermonde system g(a) = -f(a) has full rank r.
      total += ipow(F.q(), k - r);
      return;
    }
    // r > k: the unique interpolant of -f on the subset must have degree < k.
    Word w{F, std::vector<Elem>(subset.begin(), subset.end()), {}};
    for (Elem a : subset) w.values.push_back(F.neg(f.eval(a)));
    const Poly g = lagrange_interpolate(w);
    if (g.is_zero() || *g.degree() < k) ++total;
  });
  return total;
}

std::uint64_t count_M_subsets(const Poly& f, std::size_t k, std::size_t r, const Exec& exec) {
  const auto points = f.field().elements();
  return count_vanishing_pairs(f, k, r, points, exec);
}

std::uint64_t count_M_polys(const Poly& f, std::size_t k, std::size_t r, const Exec& exec) {
  const auto hist = count_N_all(f, k, exec);
  std::uint64_t total = 0;
  for (std::size_t t = r; t < hist.size(); ++t) total += hist[t] * choose_u64(t, r);
  return total;
}

std::uint64_t count_N2(const Poly& target, std::size_t r, std::size_t d, std::size_t m, const Exec& exec,
                       bool nonzero_points) {
  const Field& F = target.field();
  if (target.coeff(0) != 1) throw Error(ErrorKind::InvalidArgument, "N2 target must have constant term 1");
  if (r > d) throw Error(ErrorKind::RangeError, "N2 needs r <= d");
  const std::vector<Elem> omega = nonzero_points ? F.nonzero_elements() : F.elements();
  const std::size_t w = omega.size();
  if (r > w) return 0;

  const std::uint64_t tuples = ipow(w, r);
  const std::size_t free_h = d - r;
  const std::uint64_t h_count = ipow(F.q(), free_h);
  require_budget(dpow(w, r) * static_cast<double>(h_count), exec, "N2 enumeration");

  const std::size_t len = m + 1;
  std::vector<Elem> want(len);
  for (std::size_t i = 0; i < len; ++i) want[i] = target.coeff(i);

  // Product of two truncated series, both of length len.
  auto mul_trunc = [&](const std::vector<Elem>& a, const std::vector<Elem>& b) {
    std::vector<Elem> out(len, 0);
    for (std::size_t i = 0; i < len; ++i) {
      if (a[i] == 0) continue;
      for (std::size_t j = 0; i + j < len; ++j) out[i + j] = F.add(out[i + j], F.mul(a[i], b[j]));
    }
    return out;
  };

  auto chunks = map_chunks<std::uint64_t>(tuples, exec.workers, [&](std::uint64_t begin, std::uint64_t end) {
    std::uint64_t count = 0;
    std::vector<std::size_t> idx(r);
    std::vector<Elem> h(len);
    for (std::uint64_t t = begin; t < end; ++t) {
      std::uint64_t v = t;
      for (std::size_t i = 0; i < r; ++i) {
        idx[i] = static_cast<std::size_t>(v % w);
        v /= w;
      }
      bool distinct = true;
      for (std::size_t i = 0; i < r && distinct; ++i)
        for (std::size_t j = i + 1; j < r; ++j)
          if (idx[i] == idx[j]) {
            distinct = false;
            break;
          }
      if (!distinct) continue;

      std::vector<Elem> prod(len, 0);
      prod[0] = 1;
      for (std::size_t i = 0; i < r; ++i) {
        std::vector<Elem> lin(len, 0);
        lin[0] = 1;
        if (len > 1) lin[1] = F.neg(omega[idx[i]]);
        prod = mul_trunc(prod, lin);
      }
      for (std::uint64_t hi = 0; hi < h_count; ++hi) {
        std::fill(h.begin(), h.end(), 0);
        h[0] = 1;
        std::uint64_t hv = hi;
        for (std::size_t c = 1; c <= free_h; ++c) {
          const Elem coeff = static_cast<Elem>(hv % F.q());
          hv /= F.q();
          if (c < len) h[c] = coeff;
        }
        if (mul_trunc(prod, h) == want) ++count;
      }
    }
    return count;
  });
  return std::accumulate(chunks.begin(), chunks.end(), std::uint64_t{0});
}

std::uint64_t count_N2_star(const Poly& target, std::size_t r, std::size_t d, std::size_t m, const Exec& exec) {
  return count_N2(target, r, d, m, exec, true);
}

std::uint64_t unordered_from_ordered(std::uint64_t ordered, std::size_t r) {
  std::uint64_t fact = 1;
  for (std::size_t i = 2; i <= r; ++i) fact *= i;
  if (ordered % fact != 0)
    throw Error(ErrorKind::NonIntegralResult, "ordered count " + std::to_string(ordered) + " not divisible by r!");
  return ordered / fact;
}

Poly reversed_top(const Poly& normalized, std::size_t k) {
  const auto d = normalized.degree();
  if (!d || *d < k || !normalized.is_monic())
    throw Error(ErrorKind::InvalidArgument, "reversal needs a monic polynomial of degree >= k");
  const std::size_t m = *d - k;
  std::vector<Elem> coeffs(m + 1);
  for (std::size_t i = 0; i <= m; ++i) coeffs[i] = normalized.coeff(*d - i);
  return Poly(normalized.field(), std::move(coeffs));
}

bool AlphaDecomposition::reversal_holds(std::size_t r) const {
  std::uint64_t fact = 1;
  for (std::size_t i = 2; i <= r; ++i) fact *= i;
  return avoids_zero * fact == n2_star;
}

AlphaDecomposition alpha_decompose(const Poly& f_in, std::size_t k, std::size_t r, const Exec& exec) {
  const Field& F = f_in.field();
  const Poly f = normalize_for_counting(f_in, k);
  if (f.is_zero()) throw Error(ErrorKind::IsCodeword, "alpha decomposition needs deg f >= k");
  const std::size_t d = *f.degree();
  const std::size_t m = d - k;

  AlphaDecomposition out;
  const auto nonzero = F.nonzero_elements();
  out.avoids_zero = count_vanishing_pairs(f, k, r, nonzero, exec);
  out.m_subsets = count_M_subsets(f, k, r, exec);
  out.contains_zero = out.m_subsets - out.avoids_zero;
  out.m_polys = count_M_polys(f, k, r, exec);

  if (k >= 1 && r >= 1) {
    // Dividing f + g by x when g(0) = -f(0) = 0.
    std::vector<Elem> shifted(f.coeffs().begin() + 1, f.coeffs().end());
    const Poly f_div_x(F, std::move(shifted));
    out.shifted_avoids_zero = count_vanishing_pairs(f_div_x, k - 1, r - 1, nonzero, exec);
  }
  if (r <= d) out.n2_star = count_N2_star(reversed_top(f, k), r, d, m, exec);
  return out;
}

}  // namespace rsdl
