#pragma once

#include <algorithm>
#include <cstdint>
#include <future>
#include <istream>
#include <map>
#include <numeric>
#include <optional>
#include <ostream>
#include <set>
#include <sstream>
#include <string>
#include <utility>
#include <vector>

#include "birkhoff/characters.hpp"

namespace birkhoff {

/// Worker cap for the pair scans; 1 means sequential.
inline int& worker_cap() {
  static int cap = 1;
  return cap;
}

/// Permutation of {0, ..., n-1} in one-line form. Composition convention:
/// (a.compose(b))(i) = a(b(i)).
class Permutation {
 public:
  Permutation() = default;
  explicit Permutation(std::vector<int> images) : img_(std::move(images)) {
    std::vector<bool> seen(img_.size(), false);
    for (int v : img_) {
      if (v < 0 || v >= static_cast<int>(img_.size()) || seen[v])
        throw std::invalid_argument("Permutation: images are not a bijection");
      seen[v] = true;
    }
  }

  static Permutation identity(int n) {
    std::vector<int> img(n);
    std::iota(img.begin(), img.end(), 0);
    return Permutation(std::move(img));
  }

  int n() const { return static_cast<int>(img_.size()); }
  int operator()(int i) const { return img_[i]; }
  const std::vector<int>& images() const { return img_; }

  Permutation compose(const Permutation& other) const {
    if (other.n() != n()) throw std::invalid_argument("Permutation: ground-set mismatch");
    std::vector<int> img(img_.size());
    for (std::size_t i = 0; i < img_.size(); ++i) img[i] = img_[other.img_[i]];
    return Permutation(std::move(img));
  }

  Permutation inverse() const {
    std::vector<int> img(img_.size());
    for (std::size_t i = 0; i < img_.size(); ++i) img[img_[i]] = static_cast<int>(i);
    return Permutation(std::move(img));
  }

  int sign() const {
    std::vector<bool> seen(img_.size(), false);
    int parity = 0;
    for (std::size_t i = 0; i < img_.size(); ++i) {
      if (seen[i]) continue;
      int len = 0;
      for (std::size_t j = i; !seen[j]; j = img_[j]) {
        seen[j] = true;
        ++len;
      }
      parity ^= (len - 1) & 1;
    }
    return parity ? -1 : 1;
  }

  Partition cycle_type() const {
    std::vector<bool> seen(img_.size(), false);
    std::vector<int> lens;
    for (std::size_t i = 0; i < img_.size(); ++i) {
      if (seen[i]) continue;
      int len = 0;
      for (std::size_t j = i; !seen[j]; j = img_[j]) {
        seen[j] = true;
        ++len;
      }
      lens.push_back(len);
    }
    std::sort(lens.rbegin(), lens.rend());
    return Partition(std::move(lens));
  }

  /// True when exactly one cycle has length >= 2 (all other points fixed).
  bool is_single_cycle() const {
    std::vector<bool> seen(img_.size(), false);
    int big = 0;
    for (std::size_t i = 0; i < img_.size(); ++i) {
      if (seen[i]) continue;
      int len = 0;
      for (std::size_t j = i; !seen[j]; j = img_[j]) {
        seen[j] = true;
        ++len;
      }
      if (len >= 2 && ++big > 1) return false;
    }
    return big == 1;
  }

  /// Length of the unique nontrivial cycle, or 0 for the identity / several cycles.
  int single_cycle_length() const {
    std::vector<bool> seen(img_.size(), false);
    int big = 0, biglen = 0;
    for (std::size_t i = 0; i < img_.size(); ++i) {
      if (seen[i]) continue;
      int len = 0;
      for (std::size_t j = i; !seen[j]; j = img_[j]) {
        seen[j] = true;
        ++len;
      }
      if (len >= 2) {
        if (++big > 1) return 0;
        biglen = len;
      }
    }
    return big == 1 ? biglen : 0;
  }

  friend bool operator==(const Permutation& a, const Permutation& b) { return a.img_ == b.img_; }
  friend auto operator<=>(const Permutation& a, const Permutation& b) { return a.img_ <=> b.img_; }

 private:
  std::vector<int> img_;
};

inline std::vector<Permutation> all_permutations(int n) {
  std::vector<int> img(n);
  std::iota(img.begin(), img.end(), 0);
  std::vector<Permutation> out;
  do out.emplace_back(img);
  while (std::next_permutation(img.begin(), img.end()));
  return out;
}

/// Lexicographic rank of the one-line form among all of S_n.
inline long perm_rank(const Permutation& p) {
  const int n = p.n();
  long rank = 0;
  for (int i = 0; i < n; ++i) {
    int smaller = 0;
    for (int j = i + 1; j < n; ++j)
      if (p(j) < p(i)) ++smaller;
    rank = rank * (n - i) + smaller;
  }
  return rank;
}

/// Duplicate-free set of permutations on a common ground set, kept sorted.
struct PermSet {
  int n = 0;
  std::vector<Permutation> elements;

  static PermSet make(int n, std::vector<Permutation> elems) {
    for (const auto& p : elems)
      if (p.n() != n) throw std::invalid_argument("PermSet: mixed ground sets");
    std::sort(elems.begin(), elems.end());
    if (std::adjacent_find(elems.begin(), elems.end()) != elems.end())
      throw std::invalid_argument("PermSet: duplicate element");
    return PermSet{n, std::move(elems)};
  }

  std::size_t size() const { return elements.size(); }
};

inline PermSet full_symmetric_group(int n) { return PermSet::make(n, all_permutations(n)); }

inline bool is_birkhoff_edge(const Permutation& sigma, const Permutation& tau) {
  if (sigma.n() != tau.n()) throw std::invalid_argument("is_birkhoff_edge: ground-set mismatch");
  return sigma.compose(tau.inverse()).is_single_cycle();
}

namespace detail {

template <typename Fn, typename Reduce, typename Acc>
Acc chunked_reduce(std::size_t count, Acc init, Fn per_index, Reduce combine) {
  const int workers = std::max(1, worker_cap());
  if (workers == 1 || count < 2048) {
    Acc acc = init;
    for (std::size_t i = 0; i < count; ++i) acc = combine(acc, per_index(i));
    return acc;
  }
  const std::size_t chunk = (count + workers - 1) / workers;
  std::vector<std::future<Acc>> futs;
  for (int w = 0; w < workers; ++w) {
    std::size_t lo = w * chunk, hi = std::min(count, lo + chunk);
    if (lo >= hi) break;
    futs.push_back(std::async(std::launch::async, [=]() {
      Acc acc = init;
      for (std::size_t i = lo; i < hi; ++i) acc = combine(acc, per_index(i));
      return acc;
    }));
  }
  Acc acc = init;
  for (auto& f : futs) acc = combine(acc, f.get());
  return acc;
}

}  // namespace detail

/// Ordered pairs (pi, pi') in A^2 whose quotient is an (n-ell)-cycle.
inline Int count_edges_ell(const PermSet& A, int ell) {
  if (ell < 0 || ell > A.n - 2) throw std::invalid_argument("count_edges_ell: need 0 <= ell <= n-2");
  const int target = A.n - ell;
  const std::size_t m = A.size();
  long total = detail::chunked_reduce(
      m * m, 0L,
      [&](std::size_t idx) -> long {
        const Permutation& a = A.elements[idx / m];
        const Permutation& b = A.elements[idx % m];
        return a.compose(b.inverse()).single_cycle_length() == target ? 1 : 0;
      },
      [](long x, long y) { return x + y; });
  return total;
}

namespace detail {

inline std::map<Partition, long> quotient_type_counts(const PermSet& A) {
  std::map<Partition, long> counts;
  for (const auto& a : A.elements) {
    for (const auto& b : A.elements) {
      ++counts[a.compose(b.inverse()).cycle_type()];
    }
  }
  return counts;
}

}  // namespace detail

/// chi^lambda(phi_A) = sum over ordered pairs of chi^lambda(pi pi'^-1) / |A|^2.
inline Rational phi_char(const PermSet& A, const Partition& lambda) {
  if (lambda.size() != A.n) throw std::invalid_argument("phi_char: |lambda| != n");
  if (A.elements.empty()) throw std::invalid_argument("phi_char: empty set");
  Int num = 0;
  for (const auto& [type, cnt] : detail::quotient_type_counts(A))
    num += Int(cnt) * mn_character(lambda, type);
  Int sz(static_cast<long>(A.size()));
  return Rational(num, sz * sz);
}

/// Exact check of the edge-counting identity
/// |E_ell[A,A]| = |A|^2 |S_n| |C_{n,n-ell}| <phi_A, psi_ell>.
inline bool parseval_check(const PermSet& A, int ell, int table_limit = 12) {
  if (A.n > table_limit) throw std::invalid_argument("parseval_check: n exceeds table limit");
  if (ell < 0 || ell > A.n - 2) throw std::invalid_argument("parseval_check: bad ell");
  const Int lhs = count_edges_ell(A, ell);
  const auto counts = detail::quotient_type_counts(A);
  const Partition cls = cycle_with_fixed_points(A.n, ell);
  Rational sum;  // sum_lambda chi(phi_A * |A|^2) chi(psi_ell)
  for (const auto& lam : enumerate_partitions(A.n)) {
    Int inner = 0;
    for (const auto& [type, cnt] : counts) inner += Int(cnt) * mn_character(lam, type);
    sum += Rational(inner * mn_character(lam, cls));
  }
  Rational rhs = Rational(cycle_class_size(A.n, A.n - ell), factorial(A.n)) * sum;
  return rhs == Rational(lhs);
}

/// A failing pair (I, J) for (k, r)-pseudorandomness, or nullopt when the
/// set is pseudorandom. The returned witness has the maximal hit
/// probability; ties resolve to the lexicographically least (I, J).
struct TupleWitness {
  std::vector<int> I, J;
};

namespace detail {

inline void distinct_tuples_rec(int n, int k, std::vector<int>& cur, std::vector<bool>& used,
                                std::vector<std::vector<int>>& out) {
  if (static_cast<int>(cur.size()) == k) {
    out.push_back(cur);
    return;
  }
  for (int v = 0; v < n; ++v) {
    if (used[v]) continue;
    used[v] = true;
    cur.push_back(v);
    distinct_tuples_rec(n, k, cur, used, out);
    cur.pop_back();
    used[v] = false;
  }
}

inline std::vector<std::vector<int>> distinct_tuples(int n, int k) {
  std::vector<std::vector<int>> out;
  std::vector<int> cur;
  std::vector<bool> used(n, false);
  distinct_tuples_rec(n, k, cur, used, out);
  return out;
}

}  // namespace detail

inline std::optional<TupleWitness> pseudorandom_witness(const PermSet& A, int k,
                                                        const Rational& r) {
  if (k < 1 || k > A.n) throw std::invalid_argument("pseudorandom_witness: need 1 <= k <= n");
  if (A.elements.empty()) throw std::invalid_argument("pseudorandom_witness: empty set");
  const Rational threshold = r * Rational(static_cast<long>(A.size()))
                           / Rational(falling_factorial(A.n, k));
  long best_count = -1;
  TupleWitness best;
  for (const auto& J : detail::distinct_tuples(A.n, k)) {
    std::map<std::vector<int>, long> hits;
    std::vector<int> image(k);
    for (const auto& pi : A.elements) {
      for (int i = 0; i < k; ++i) image[i] = pi(J[i]);
      ++hits[image];
    }
    for (const auto& [I, cnt] : hits) {
      if (Rational(cnt) < threshold) continue;  // pseudorandom demands a strict bound
      if (cnt > best_count ||
          (cnt == best_count && std::make_pair(I, J) < std::make_pair(best.I, best.J))) {
        best_count = cnt;
        best = TupleWitness{I, J};
      }
    }
  }
  if (best_count < 0) return std::nullopt;
  return best;
}

/// Conjugate-and-restrict step: from a witness violating (k, r)-pseudorandomness,
/// produce C in S_(n-k) with density at least r times that of A, no more
/// edges, and the same sign homogeneity.
inline PermSet density_increment_step(const PermSet& A, int k, const Rational& r,
                                      const TupleWitness& witness) {
  const int n = A.n;
  if (static_cast<int>(witness.I.size()) != k || static_cast<int>(witness.J.size()) != k)
    throw std::invalid_argument("density_increment_step: witness arity mismatch");
  std::vector<Permutation> matching;
  for (const auto& pi : A.elements) {
    bool hit = true;
    for (int i = 0; i < k && hit; ++i) hit = pi(witness.J[i]) == witness.I[i];
    if (hit) matching.push_back(pi);
  }
  if (Rational(static_cast<long>(matching.size())) * Rational(falling_factorial(n, k)) <
      r * Rational(static_cast<long>(A.size())))
    throw std::invalid_argument("density_increment_step: witness does not violate pseudorandomness");

  auto order_preserving = [&](const std::vector<int>& special, bool special_to_top) {
    // special_to_top: special[i] -> n-k+i; otherwise position n-k+i -> special[i].
    std::vector<bool> is_special(n, false);
    for (int v : special) is_special[v] = true;
    std::vector<int> rest;
    for (int v = 0; v < n; ++v)
      if (!is_special[v]) rest.push_back(v);
    std::vector<int> img(n);
    if (special_to_top) {
      for (int i = 0; i < k; ++i) img[special[i]] = n - k + i;
      for (int i = 0; i < n - k; ++i) img[rest[i]] = i;
    } else {
      for (int i = 0; i < k; ++i) img[n - k + i] = special[i];
      for (int i = 0; i < n - k; ++i) img[i] = rest[i];
    }
    return Permutation(std::move(img));
  };
  const Permutation sigma = order_preserving(witness.I, true);
  const Permutation sigma_prime = order_preserving(witness.J, false);

  std::vector<Permutation> restricted;
  for (const auto& pi : matching) {
    Permutation tau = sigma.compose(pi).compose(sigma_prime);
    for (int i = n - k; i < n; ++i)
      if (tau(i) != i) throw std::logic_error("density_increment_step: tail not fixed");
    std::vector<int> img(tau.images().begin(), tau.images().begin() + (n - k));
    restricted.emplace_back(std::move(img));
  }
  return PermSet::make(n - k, std::move(restricted));
}

/// Iterates density increment steps (smallest violating even k, maximal
/// witness) until the set is c0^k-pseudorandom for every even k.
inline PermSet full_density_increment(const PermSet& A, const Rational& c0) {
  if (!(c0 > Rational(1))) throw std::invalid_argument("full_density_increment: need c0 > 1");
  PermSet cur = A;
  for (;;) {
    bool stepped = false;
    for (int k = 2; k <= cur.n; k += 2) {
      Rational r = rational_pow(c0, k);
      auto witness = pseudorandom_witness(cur, k, r);
      if (witness) {
        cur = density_increment_step(cur, k, r, *witness);
        stepped = true;
        break;
      }
    }
    if (!stepped) return cur;
  }
}

// ---- explicit constructions ---------------------------------------------

namespace detail {

inline Permutation embed_pair(int n, int split, const Permutation& a, const Permutation& b) {
  std::vector<int> img(n);
  for (int i = 0; i < split; ++i) img[i] = a(i);
  for (int j = 0; j + split < n; ++j) img[split + j] = split + b(j);
  return Permutation(std::move(img));
}

inline Permutation half_swap(int n) {
  std::vector<int> img(n);
  for (int i = 0; i < n / 2; ++i) {
    img[i] = n / 2 + i;
    img[n / 2 + i] = i;
  }
  return Permutation(std::move(img));
}

inline bool is_power_of_two(int n) { return n >= 1 && (n & (n - 1)) == 0; }

inline std::vector<Permutation> independent_basic_rec(int n) {
  if (n == 1) return {Permutation::identity(1)};
  const int high = (n + 1) / 2, low = n / 2;
  const auto sub = independent_basic_rec(high);
  std::vector<Permutation> out;
  for (const auto& sigma : all_permutations(low)) {
    std::vector<int> ext(high);
    for (int i = 0; i < low; ++i) ext[i] = sigma(i);
    for (int i = low; i < high; ++i) ext[i] = i;
    const Permutation inv_ext = Permutation(std::move(ext)).inverse();
    for (const auto& tau : sub) out.push_back(embed_pair(n, low, sigma, inv_ext.compose(tau)));
  }
  return out;
}

inline std::vector<Permutation> independent_improved_rec(int n) {
  if (n <= 2) return {Permutation::identity(n)};
  const int h = n / 2;
  const auto sub = independent_improved_rec(h);
  std::vector<Permutation> first;
  for (const auto& sigma : all_permutations(h)) {
    const Permutation inv = sigma.inverse();
    for (const auto& tau : sub) first.push_back(embed_pair(n, h, sigma, inv.compose(tau)));
  }
  const Permutation gamma = half_swap(n);
  std::vector<Permutation> out = first;
  for (const auto& pi : first) out.push_back(gamma.compose(pi));
  return out;
}

}  // namespace detail

inline PermSet construct_independent(int n, bool improved) {
  if (n < 1) throw std::invalid_argument("construct_independent: n < 1");
  if (improved && !detail::is_power_of_two(n))
    throw std::invalid_argument("construct_independent: improved variant needs a power of 2");
  auto elems = improved ? detail::independent_improved_rec(n) : detail::independent_basic_rec(n);
  return PermSet::make(n, std::move(elems));
}

/// Exact size of the constructed independent set (the recursion product).
inline Int independent_size_target(int n, bool improved) {
  if (improved) {
    if (!detail::is_power_of_two(n))
      throw std::invalid_argument("independent_size_target: improved needs a power of 2");
    if (n <= 2) return 1;
    return Int(2) * factorial(n / 2) * independent_size_target(n / 2, true);
  }
  if (n == 1) return 1;
  return factorial(n / 2) * independent_size_target((n + 1) / 2, false);
}

/// Closed-form floor-factorial product: a lower bound on the basic
/// construction size, and the exact size for the doubled variant.
inline Int independent_closed_form(int n, bool improved) {
  if (improved) {
    if (!detail::is_power_of_two(n))
      throw std::invalid_argument("independent_closed_form: improved needs a power of 2");
    if (n == 1) return 1;
    Int prod = 1;
    for (long p = 2; p < n; p *= 2) prod *= factorial(p);
    return Int(n / 2) * prod;
  }
  Int prod = 1;
  for (long d = 2; d <= n; d *= 2) prod *= factorial(n / d);
  return prod;
}

/// Proper coloring of all of S_n; colors indexed by lexicographic rank.
struct Coloring {
  int n = 0;
  std::vector<int> colors;
  int palette = 0;
};

namespace detail {

inline Coloring coloring_basic_rec(int n) {
  if (n == 1) return Coloring{1, {0}, 1};
  const int h = (n + 1) / 2;  // first block is the larger half
  const Coloring sub = coloring_basic_rec(h);
  const auto perms = all_permutations(n);
  Coloring out;
  out.n = n;
  out.colors.resize(perms.size());
  std::map<std::pair<std::vector<int>, int>, int> ids;
  for (std::size_t rank = 0; rank < perms.size(); ++rank) {
    const Permutation& pi = perms[rank];
    std::vector<int> image(h);
    for (int i = 0; i < h; ++i) image[i] = pi(i);
    std::sort(image.begin(), image.end());
    std::vector<bool> in_image(n, false);
    for (int v : image) in_image[v] = true;
    std::vector<int> rep_img(n);
    for (int i = 0; i < h; ++i) rep_img[i] = image[i];
    int pos = h;
    for (int v = 0; v < n; ++v)
      if (!in_image[v]) rep_img[pos++] = v;
    const Permutation g = Permutation(std::move(rep_img)).inverse().compose(pi);

    std::vector<int> ga(h), gb(h);
    for (int i = 0; i < h; ++i) ga[i] = g(i);
    for (int j = 0; j < n - h; ++j) gb[j] = g(h + j) - h;
    for (int j = n - h; j < h; ++j) gb[j] = j;
    const int sub_color =
        sub.colors[perm_rank(Permutation(std::move(ga)).compose(Permutation(std::move(gb))))];

    auto it = ids.emplace(std::make_pair(image, sub_color), static_cast<int>(ids.size())).first;
    out.colors[rank] = it->second;
  }
  out.palette = static_cast<int>(ids.size());
  return out;
}

inline Coloring coloring_improved_rec(int n) {
  if (n == 1) return Coloring{1, {0}, 1};
  if (n == 2) return Coloring{2, {0, 1}, 2};  // rainbow base
  const int h = n / 2;
  const Coloring sub = coloring_improved_rec(h);
  const Permutation gamma = half_swap(n);
  const auto perms = all_permutations(n);
  Coloring out;
  out.n = n;
  out.colors.resize(perms.size());
  std::map<std::pair<std::vector<int>, int>, int> ids;
  for (std::size_t rank = 0; rank < perms.size(); ++rank) {
    const Permutation& pi = perms[rank];
    std::vector<int> image(h);
    for (int i = 0; i < h; ++i) image[i] = pi(i);
    std::sort(image.begin(), image.end());
    const bool direct = std::find(image.begin(), image.end(), 0) != image.end();
    std::vector<int> star = image;
    if (!direct) {
      std::vector<bool> in_image(n, false);
      for (int v : image) in_image[v] = true;
      star.clear();
      for (int v = 0; v < n; ++v)
        if (!in_image[v]) star.push_back(v);
    }
    std::vector<bool> in_star(n, false);
    for (int v : star) in_star[v] = true;
    std::vector<int> rep_img(n);
    for (int i = 0; i < h; ++i) rep_img[i] = star[i];
    int pos = h;
    for (int v = 0; v < n; ++v)
      if (!in_star[v]) rep_img[pos++] = v;
    Permutation g = Permutation(std::move(rep_img)).inverse().compose(pi);
    if (!direct) g = gamma.compose(g);

    std::vector<int> ga(h), gb(h);
    for (int i = 0; i < h; ++i) ga[i] = g(i);
    for (int j = 0; j < h; ++j) gb[j] = g(h + j) - h;
    const int sub_color =
        sub.colors[perm_rank(Permutation(std::move(ga)).compose(Permutation(std::move(gb))))];

    auto it = ids.emplace(std::make_pair(star, sub_color), static_cast<int>(ids.size())).first;
    out.colors[rank] = it->second;
  }
  out.palette = static_cast<int>(ids.size());
  return out;
}

}  // namespace detail

inline Coloring construct_coloring(int n, bool improved) {
  if (n < 1) throw std::invalid_argument("construct_coloring: n < 1");
  if (improved && !detail::is_power_of_two(n))
    throw std::invalid_argument("construct_coloring: improved variant needs a power of 2");
  return improved ? detail::coloring_improved_rec(n) : detail::coloring_basic_rec(n);
}

inline Int coloring_size_target(int n, bool improved) {
  if (improved) {
    if (!detail::is_power_of_two(n))
      throw std::invalid_argument("coloring_size_target: improved needs a power of 2");
    if (n == 1) return 1;
    if (n == 2) return 2;
    return binomial(n, n / 2) / 2 * coloring_size_target(n / 2, true);
  }
  if (n == 1) return 1;
  return binomial(n, (n + 1) / 2) * coloring_size_target((n + 1) / 2, false);
}

inline Int coloring_closed_form(int n, bool improved) {
  if (improved) {
    if (!detail::is_power_of_two(n))
      throw std::invalid_argument("coloring_closed_form: improved needs a power of 2");
    Int prod = 1;
    for (long p = 2; p <= n; p *= 2) prod *= binomial(p, p / 2);
    return prod * 2 / n;
  }
  Int prod = 1;
  long top = n;
  while (top > 1) {
    long next = (top + 1) / 2;
    prod *= binomial(top, next);
    top = next;
  }
  return prod;  // trailing binom(1,1) factors are 1
}

// ---- verification and brute force ---------------------------------------

inline bool verify_independent(const PermSet& A) {
  const std::size_t m = A.size();
  return detail::chunked_reduce(
      m * m, true,
      [&](std::size_t idx) -> bool {
        std::size_t i = idx / m, j = idx % m;
        if (i >= j) return true;
        return !is_birkhoff_edge(A.elements[i], A.elements[j]);
      },
      [](bool x, bool y) { return x && y; });
}

inline bool verify_coloring(const Coloring& col, bool check_signs) {
  const auto perms = all_permutations(col.n);
  if (col.colors.size() != perms.size())
    throw std::invalid_argument("verify_coloring: coloring is not total on S_n");
  std::map<int, std::vector<std::size_t>> classes;  // tokens need not be contiguous
  for (std::size_t r = 0; r < perms.size(); ++r) classes[col.colors[r]].push_back(r);
  for (const auto& entry : classes) {
    const auto& cls = entry.second;
    for (std::size_t a = 0; a < cls.size(); ++a) {
      for (std::size_t b = a + 1; b < cls.size(); ++b) {
        if (is_birkhoff_edge(perms[cls[a]], perms[cls[b]])) return false;
        if (check_signs && perms[cls[a]].sign() != perms[cls[b]].sign()) return false;
      }
    }
  }
  return true;
}

namespace detail {

/// Max clique with greedy-coloring bound on a bitset graph.
class MaxCliqueSolver {
 public:
  MaxCliqueSolver(int nverts, const std::vector<std::vector<bool>>& adj)
      : n_(nverts), words_((nverts + 63) / 64), adj_(static_cast<std::size_t>(nverts) * words_) {
    for (int i = 0; i < nverts; ++i)
      for (int j = 0; j < nverts; ++j)
        if (adj[i][j]) adj_[i * words_ + j / 64] |= 1ULL << (j % 64);
  }

  std::vector<int> run() {
    std::vector<std::uint64_t> all(words_);
    for (int v = 0; v < n_; ++v) all[v / 64] |= 1ULL << (v % 64);
    expand(all, 0);
    return best_;
  }

 private:
  void expand(std::vector<std::uint64_t>& cand, int depth) {
    if (none(cand)) {
      if (depth > static_cast<int>(best_.size())) best_ = stack_;
      return;
    }
    std::vector<int> order, bound;
    color_sort(cand, order, bound);
    std::vector<std::uint64_t> live = cand;
    for (int idx = static_cast<int>(order.size()) - 1; idx >= 0; --idx) {
      if (depth + bound[idx] <= static_cast<int>(best_.size())) return;
      const int v = order[idx];
      std::vector<std::uint64_t> next(words_);
      for (int w = 0; w < words_; ++w) next[w] = live[w] & adj_[v * words_ + w];
      stack_.push_back(v);
      expand(next, depth + 1);
      stack_.pop_back();
      live[v / 64] &= ~(1ULL << (v % 64));
    }
  }

  void color_sort(const std::vector<std::uint64_t>& cand, std::vector<int>& order,
                  std::vector<int>& bound) {
    std::vector<std::uint64_t> uncolored = cand;
    int color = 0;
    while (!none(uncolored)) {
      ++color;
      std::vector<std::uint64_t> avail = uncolored;
      while (!none(avail)) {
        const int v = first_bit(avail);
        order.push_back(v);
        bound.push_back(color);
        uncolored[v / 64] &= ~(1ULL << (v % 64));
        avail[v / 64] &= ~(1ULL << (v % 64));
        for (int w = 0; w < words_; ++w) avail[w] &= ~adj_[v * words_ + w];
      }
    }
  }

  bool none(const std::vector<std::uint64_t>& bits) const {
    for (auto w : bits)
      if (w) return false;
    return true;
  }

  int first_bit(const std::vector<std::uint64_t>& bits) const {
    for (int w = 0; w < words_; ++w)
      if (bits[w]) return w * 64 + __builtin_ctzll(bits[w]);
    return -1;
  }

  int n_, words_;
  std::vector<std::uint64_t> adj_;
  std::vector<int> best_, stack_;
};

}  // namespace detail

struct BruteAlphaResult {
  int value = 0;
  PermSet witness;
};

/// Exact maximum independent set of B_n by branch and bound over the
/// complement (compatibility) graph. Capped at n <= 6.
inline BruteAlphaResult brute_alpha(int n) {
  if (n < 1 || n > 6) throw std::invalid_argument("brute_alpha: need 1 <= n <= 6");
  const auto perms = all_permutations(n);
  const int v = static_cast<int>(perms.size());
  std::vector<std::vector<bool>> compat(v, std::vector<bool>(v, false));
  for (int i = 0; i < v; ++i)
    for (int j = 0; j < v; ++j)
      if (i != j && !is_birkhoff_edge(perms[i], perms[j])) compat[i][j] = true;
  detail::MaxCliqueSolver solver(v, compat);
  auto best = solver.run();
  std::vector<Permutation> elems;
  for (int idx : best) elems.push_back(perms[idx]);
  return BruteAlphaResult{static_cast<int>(best.size()), PermSet::make(n, std::move(elems))};
}

// ---- file formats ---------------------------------------------------------

/// First line n, then one permutation per line as space-separated 1-based images.
inline void write_permset(std::ostream& os, const PermSet& A) {
  os << A.n << "\n";
  for (const auto& p : A.elements) {
    for (int i = 0; i < A.n; ++i) os << (i ? " " : "") << p(i) + 1;
    os << "\n";
  }
}

inline PermSet read_permset(std::istream& is) {
  int n;
  if (!(is >> n) || n < 0) throw std::invalid_argument("permset: bad ground-set size");
  std::vector<Permutation> elems;
  std::string line;
  std::getline(is, line);
  while (std::getline(is, line)) {
    if (line.empty()) continue;
    std::istringstream ls(line);
    std::vector<int> img;
    int x;
    while (ls >> x) img.push_back(x - 1);
    if (static_cast<int>(img.size()) != n)
      throw std::invalid_argument("permset: wrong number of images");
    elems.emplace_back(std::move(img));
  }
  return PermSet::make(n, std::move(elems));
}

/// First line n, then alternating lines: permutation images, color token.
inline void write_coloring(std::ostream& os, const Coloring& col) {
  const auto perms = all_permutations(col.n);
  os << col.n << "\n";
  for (std::size_t r = 0; r < perms.size(); ++r) {
    for (int i = 0; i < col.n; ++i) os << (i ? " " : "") << perms[r](i) + 1;
    os << "\n" << col.colors[r] << "\n";
  }
}

inline Coloring read_coloring(std::istream& is) {
  int n;
  if (!(is >> n) || n < 1) throw std::invalid_argument("coloring: bad ground-set size");
  Coloring col;
  col.n = n;
  long total = 1;
  for (int i = 2; i <= n; ++i) total *= i;
  col.colors.assign(total, -1);
  std::set<int> used;
  for (long r = 0; r < total; ++r) {
    std::vector<int> img(n);
    for (int i = 0; i < n; ++i) {
      if (!(is >> img[i])) throw std::invalid_argument("coloring: truncated file");
      --img[i];
    }
    int token;
    if (!(is >> token)) throw std::invalid_argument("coloring: truncated file");
    col.colors[perm_rank(Permutation(img))] = token;
    used.insert(token);
  }
  for (int c : col.colors)
    if (c < 0) throw std::invalid_argument("coloring: not every permutation was assigned");
  col.palette = static_cast<int>(used.size());
  return col;
}

}  // namespace birkhoff
