#include "nilab/triplets.hpp"
#include "nilab/errors.hpp"
#include "nilab/subspace.hpp"

#include <algorithm>
#include <map>
#include <sstream>

namespace nilab {

unsigned Partition::size() const {
  unsigned s = 0;
  for (auto p : parts)
    s += p;
  return s;
}

std::string Partition::to_string() const {
  std::string out;
  for (std::size_t i = 0; i < parts.size(); ++i)
    out += (i ? "," : "") + std::to_string(parts[i]);
  return out;
}

Partition parse_partition(const std::string& text) {
  Partition p;
  std::stringstream ss(text);
  std::string item;
  while (std::getline(ss, item, ',')) {
    if (item.empty() || item.find_first_not_of("0123456789") != std::string::npos || item.size() > 6)
      throw partition_error("malformed partition '" + text + "'");
    unsigned v = static_cast<unsigned>(std::stoul(item));
    if (v == 0)
      throw partition_error("partition parts must be positive: '" + text + "'");
    p.parts.push_back(v);
  }
  if (p.parts.empty())
    throw partition_error("empty partition");
  std::sort(p.parts.begin(), p.parts.end(), std::greater<>());
  return p;
}

namespace {

void partitions_rec(unsigned rest, unsigned max_part, std::vector<unsigned>& cur, std::vector<Partition>& out) {
  if (rest == 0) {
    out.push_back({cur});
    return;
  }
  for (unsigned k = std::min(rest, max_part); k >= 1; --k) {
    cur.push_back(k);
    partitions_rec(rest - k, k, cur, out);
    cur.pop_back();
  }
}

bool is_jordan_sl(const Mat& m) {
  for (std::size_t i = 0; i < m.rows(); ++i)
    for (std::size_t j = 0; j < m.cols(); ++j) {
      const Rat& x = m(i, j);
      if (j == i + 1 ? (x != 0 && x != 1) : sgn(x) != 0)
        return false;
    }
  return true;
}

// Diagonal of the characteristic h: every part d contributes d-1, d-3, ..., 1-d.
std::vector<long> characteristic(const Partition& p) {
  std::vector<long> diag;
  for (auto d : p.parts)
    for (unsigned i = 0; i < d; ++i)
      diag.push_back(static_cast<long>(d) - 1 - 2 * static_cast<long>(i));
  std::sort(diag.begin(), diag.end(), std::greater<>());
  return diag;
}

void check_partition(const Algebra& g, const Partition& p) {
  if (p.parts.empty() || !std::is_sorted(p.parts.begin(), p.parts.end(), std::greater<>()))
    throw partition_error("partition parts must be weakly decreasing and nonempty");
  if (p.size() != g.matrix_size())
    throw partition_error("partition " + p.to_string() + " does not sum to " + std::to_string(g.matrix_size()));
  if (!valid_for(g.family(), p))
    throw partition_error("partition " + p.to_string() + " does not label a nilpotent orbit of " + g.name());
}

struct Constructed {
  Element h, e;
};

// so/sp construction: e generic in the 2-eigenspace of ad(h).
Constructed construct_classical(const Algebra& g, const Partition& p) {
  const std::size_t n = g.matrix_size();
  auto diag = characteristic(p);
  Mat hm(n, n);
  for (std::size_t i = 0; i < n; ++i)
    hm(i, i) = diag[i];
  Element h = g.from_matrix(hm);

  std::vector<std::size_t> degree_two;
  for (std::size_t k = 0; k < g.dim(); ++k) {
    Element b = g.basis_element(k);
    if (bracket(h, b) == Rat(2) * b)
      degree_two.push_back(k);
  }
  Sampler sampler(0x5eed);
  for (int attempt = 0; attempt < 64; ++attempt) {
    Element e = g.zero();
    for (auto k : degree_two)
      e.coords[k] = attempt == 0 ? 1 : sampler.uniform(1, 7);
    if (!e.is_zero() && jordan_type(e.matrix()) == p)
      return {h, e};
  }
  throw internal_error("no element of the expected orbit found for partition " + p.to_string());
}

Triplet sl_block_triplet(const Algebra& g, const Mat& em) {
  const std::size_t n = em.rows();
  Mat hm(n, n), fm(n, n);
  std::size_t start = 0;
  while (start < n) {
    std::size_t end = start;
    while (end + 1 < n && em(end, end + 1) == 1)
      ++end;
    const long d = static_cast<long>(end - start + 1);
    for (long i = 0; i < d; ++i) {
      hm(start + i, start + i) = d - 1 - 2 * i;
      if (i + 1 < d)
        fm(start + i + 1, start + i) = (i + 1) * (d - 1 - i);
    }
    start = end + 1;
  }
  return {g.from_matrix(hm), g.from_matrix(em), g.from_matrix(fm)};
}

// f with [e, f] = h and [h, f] = -2f, echelon-first solution.
Element solve_for_f(const Algebra& g, const Element& h, const Element& e) {
  const std::size_t d = g.dim();
  Mat system = ad(e);
  Mat shifted = ad(h) + Rat(2) * Mat::identity(d);
  system.append_rows(shifted);
  Vec rhs = h.coords;
  rhs.resize(2 * d, Rat(0));
  auto f = solve(system, rhs);
  if (!f)
    throw internal_error("sl(2) completion: no f solves [e,f] = h, [h,f] = -2f");
  return g.element(*f);
}

} // namespace

std::vector<Partition> partitions_of(unsigned n) {
  std::vector<Partition> out;
  std::vector<unsigned> cur;
  partitions_rec(n, n, cur, out);
  return out;
}

bool valid_for(Family family, const Partition& p) {
  if (family == Family::A)
    return true;
  std::map<unsigned, unsigned> mult;
  for (auto x : p.parts)
    ++mult[x];
  const unsigned constrained_parity = family == Family::C ? 1 : 0;
  for (const auto& [part, m] : mult)
    if (part % 2 == constrained_parity && m % 2 != 0)
      return false;
  return true;
}

std::vector<Partition> nilpotent_partitions(const Algebra& g) {
  std::vector<Partition> out;
  for (auto& p : partitions_of(static_cast<unsigned>(g.matrix_size())))
    if (valid_for(g.family(), p))
      out.push_back(std::move(p));
  return out;
}

Partition jordan_type(const Mat& m) {
  const std::size_t n = m.rows();
  std::vector<std::size_t> ranks{n};
  Mat power = Mat::identity(n);
  while (ranks.back() > 0) {
    power = power * m;
    ranks.push_back(rank(power));
    if (ranks.size() > n + 1)
      throw contract_error("jordan_type: matrix is not nilpotent");
  }
  // at_least[k] = number of blocks of size >= k
  std::vector<unsigned> parts;
  for (std::size_t k = ranks.size() - 1; k >= 1; --k) {
    std::size_t at_least = ranks[k - 1] - ranks[k];
    std::size_t longer = k + 1 < ranks.size() ? ranks[k] - ranks[k + 1] : 0;
    for (std::size_t i = longer; i < at_least; ++i)
      parts.push_back(static_cast<unsigned>(k));
  }
  return {parts};
}

void verify_triplet(const Triplet& t) {
  if (bracket(t.h, t.e) != Rat(2) * t.e)
    throw identity_error("triplet: [h,e] != 2e");
  if (bracket(t.h, t.f) != Rat(-2) * t.f)
    throw identity_error("triplet: [h,f] != -2f");
  if (bracket(t.e, t.f) != t.h)
    throw identity_error("triplet: [e,f] != h");
}

Element nilpotent_from_partition(const Algebra& g, const Partition& p) {
  check_partition(g, p);
  if (g.family() != Family::A)
    return construct_classical(g, p).e;
  const std::size_t n = g.matrix_size();
  Mat m(n, n);
  std::size_t offset = 0;
  for (auto d : p.parts) {
    for (std::size_t i = 0; i + 1 < d; ++i)
      m(offset + i, offset + i + 1) = 1;
    offset += d;
  }
  return g.from_matrix(m);
}

Triplet sl2_complete(const Algebra& g, const Element& e) {
  if (e.algebra != &g)
    throw contract_error("element belongs to another algebra");
  if (e.is_zero())
    throw contract_error("sl2_complete: e = 0");
  Mat em = e.matrix();
  if (!power(em, static_cast<unsigned>(g.matrix_size())).is_zero())
    throw contract_error("sl2_complete: e is not nilpotent");

  Triplet t;
  if (g.family() == Family::A && is_jordan_sl(em)) {
    t = sl_block_triplet(g, em);
  } else {
    // h = [e, x] with ad(e)^2 x = -2e, so that [h, e] = 2e.
    Mat ad_e = ad(e);
    auto x = solve(ad_e * ad_e, Rat(-2) * e.coords);
    if (!x)
      throw internal_error("sl(2) completion: no h in [e, g] with [h,e] = 2e");
    Element h = g.element(ad_e * *x);
    t = {h, e, solve_for_f(g, h, e)};
  }
  verify_triplet(t);
  return t;
}

Triplet triplet_from_partition(const Algebra& g, const Partition& p) {
  if (g.family() == Family::A)
    return sl2_complete(g, nilpotent_from_partition(g, p));
  check_partition(g, p);
  if (p.parts.front() == 1)
    throw contract_error("the zero orbit has no sl(2)-triplet");
  auto [h, e] = construct_classical(g, p);
  Triplet t{h, e, solve_for_f(g, h, e)};
  verify_triplet(t);
  return t;
}

Partition principal_partition(const Algebra& g) {
  const auto n = static_cast<unsigned>(g.matrix_size());
  if (g.family() == Family::D)
    return {{n - 1, 1}};
  return {{n}};
}

Triplet principal_triplet(const Algebra& g) {
  Triplet t = triplet_from_partition(g, principal_partition(g));
  if (centralizer(t.e).dim() != g.rank())
    throw internal_error("principal nilpotent is not regular in " + g.name());
  return t;
}

} // namespace nilab
