#include "autfn/finite.hpp"

#include <algorithm>
#include <array>
#include <bit>
#include <deque>
#include <set>

#include "autfn/generators.hpp"

namespace autfn {

bool EndoSet::contains(const Endo& e) const {
  return std::binary_search(elements.begin(), elements.end(), e);
}

bool ModMatrixSet::contains(const ModMatrix& m) const {
  return std::binary_search(elements.begin(), elements.end(), m);
}

bool Vec2Subgroup::contains(std::uint32_t v) const {
  return std::binary_search(elements.begin(), elements.end(), v);
}

namespace {

template <class Elem, class Mul>
std::vector<Elem> bfs_closure(const std::vector<Elem>& gens, const Elem& id, Mul mul,
                              long cap) {
  std::set<Elem> seen{id};
  std::deque<Elem> todo{id};
  while (!todo.empty()) {
    Elem cur = todo.front();
    todo.pop_front();
    for (const Elem& g : gens) {
      Elem next = mul(cur, g);
      if (seen.insert(next).second) {
        if (static_cast<long>(seen.size()) > cap) {
          throw ClosureCapExceeded("closure exceeded cap " + std::to_string(cap));
        }
        todo.push_back(next);
      }
    }
  }
  return std::vector<Elem>(seen.begin(), seen.end());
}

template <class Elem, class Mul>
std::vector<Elem> normal_closure_impl(const std::vector<Elem>& group, const Elem& x,
                                      const Elem& id, Mul mul) {
  if (!std::binary_search(group.begin(), group.end(), x)) {
    throw ElementNotInGroup("element is not a member of the given finite group");
  }
  // Inverse of g located by scan; the ambient groups here are small.
  auto inverse_of = [&](const Elem& g) -> const Elem& {
    for (const Elem& h : group) {
      if (mul(g, h) == id) return h;
    }
    throw ElementNotInGroup("finite set is not closed under inversion");
  };
  std::set<Elem> conjugates;
  for (const Elem& g : group) {
    conjugates.insert(mul(mul(inverse_of(g), x), g));
  }
  std::vector<Elem> gens(conjugates.begin(), conjugates.end());
  return bfs_closure(gens, id, mul, static_cast<long>(group.size()));
}

}  // namespace

EndoSet closure(const std::vector<Endo>& gens, int rank, long cap) {
  if (cap < 1) throw ClosureCapExceeded("closure cap must be >= 1");
  for (const Endo& g : gens) {
    if (g.rank() != rank) {
      throw RankMismatch("closure: generator of rank " + std::to_string(g.rank()) +
                         ", expected " + std::to_string(rank));
    }
  }
  EndoSet out;
  out.rank = rank;
  out.elements = bfs_closure(
      gens, Endo::identity(rank),
      [](const Endo& a, const Endo& b) { return compose(a, b); }, cap);
  return out;
}

EndoSet build_Wn(int n, long cap) {
  std::vector<Endo> gens;
  for (int i = 1; i <= n; ++i) gens.push_back(eps(i, n));
  for (int i = 1; i < n; ++i) {
    gens.push_back(perm_endo(Perm::from_cycles({{i, i + 1}}, n), n));
  }
  return closure(gens, n, cap);
}

EndoSet build_Sigma(int n) {
  std::set<Endo> elems;
  for (const Perm& tau : Perm::all(n + 1)) {
    elems.insert(lemma3_embed(tau, n));
  }
  EndoSet out;
  out.rank = n;
  out.elements.assign(elems.begin(), elems.end());
  return out;
}

std::string to_string(Vec2Label label) {
  switch (label) {
    case Vec2Label::Trivial:
      return "trivial";
    case Vec2Label::Diag:
      return "diag";
    case Vec2Label::EvenWeight:
      return "even_weight";
    case Vec2Label::Full:
      return "full";
    case Vec2Label::Other:
      return "other";
  }
  return "other";
}

namespace {

// Canonical reduced row echelon basis of a set of GF(2) row vectors;
// unique per subspace, so usable as a dedup key.
std::vector<std::uint32_t> gf2_echelon(std::vector<std::uint32_t> rows) {
  std::array<std::uint32_t, 32> slot{};  // slot[b] has top set bit b
  for (std::uint32_t v : rows) {
    for (int bit = 31; bit >= 0 && v; --bit) {
      if (!((v >> bit) & 1u)) continue;
      if (!slot[static_cast<std::size_t>(bit)]) {
        slot[static_cast<std::size_t>(bit)] = v;
        v = 0;
      } else {
        v ^= slot[static_cast<std::size_t>(bit)];
      }
    }
  }
  for (int bit = 0; bit < 32; ++bit) {
    if (!slot[static_cast<std::size_t>(bit)]) continue;
    for (int high = bit + 1; high < 32; ++high) {
      if (slot[static_cast<std::size_t>(high)] &&
          ((slot[static_cast<std::size_t>(high)] >> bit) & 1u)) {
        slot[static_cast<std::size_t>(high)] ^= slot[static_cast<std::size_t>(bit)];
      }
    }
  }
  std::vector<std::uint32_t> basis;
  for (int bit = 31; bit >= 0; --bit) {
    if (slot[static_cast<std::size_t>(bit)]) {
      basis.push_back(slot[static_cast<std::size_t>(bit)]);
    }
  }
  return basis;
}

std::vector<std::uint32_t> span_elements(const std::vector<std::uint32_t>& basis) {
  std::vector<std::uint32_t> out{0};
  for (std::uint32_t b : basis) {
    std::size_t count = out.size();
    for (std::size_t k = 0; k < count; ++k) out.push_back(out[k] ^ b);
  }
  std::sort(out.begin(), out.end());
  return out;
}

Vec2Label classify(int n, const std::vector<std::uint32_t>& elems) {
  std::uint32_t ones = n == 32 ? ~0u : ((1u << n) - 1);
  if (elems.size() == 1) return Vec2Label::Trivial;
  if (elems.size() == (1ull << n)) return Vec2Label::Full;
  if (elems.size() == 2 && elems[1] == ones) return Vec2Label::Diag;
  if (elems.size() == (1ull << (n - 1)) &&
      std::all_of(elems.begin(), elems.end(),
                  [](std::uint32_t v) { return std::popcount(v) % 2 == 0; })) {
    return Vec2Label::EvenWeight;
  }
  return Vec2Label::Other;
}

}  // namespace

std::vector<Vec2Subgroup> sn_invariant_subgroups(int n) {
  if (n < 1) throw RankTooLarge("n must be >= 1");
  if (n > 12) throw RankTooLarge("brute force supports n <= 12, got " + std::to_string(n));

  // An invariant subgroup is a union of weight classes closed under
  // addition, hence the span of the weight classes it contains. Span bases
  // per weight class first, then all unions.
  std::vector<std::vector<std::uint32_t>> weight_basis(static_cast<std::size_t>(n) + 1);
  for (std::uint32_t v = 1; v < (1u << n); ++v) {
    weight_basis[static_cast<std::size_t>(std::popcount(v))].push_back(v);
  }
  for (auto& rows : weight_basis) rows = gf2_echelon(std::move(rows));

  std::set<std::vector<std::uint32_t>> spans;
  for (std::uint32_t mask = 0; mask < (1u << n); ++mask) {
    std::vector<std::uint32_t> rows;
    for (int w = 1; w <= n; ++w) {
      if (mask & (1u << (w - 1))) {
        rows.insert(rows.end(), weight_basis[static_cast<std::size_t>(w)].begin(),
                    weight_basis[static_cast<std::size_t>(w)].end());
      }
    }
    spans.insert(gf2_echelon(std::move(rows)));
  }

  std::vector<Vec2Subgroup> out;
  for (const auto& basis : spans) {
    Vec2Subgroup sub;
    sub.n = n;
    sub.elements = span_elements(basis);
    sub.label = classify(n, sub.elements);
    out.push_back(std::move(sub));
  }
  std::sort(out.begin(), out.end(), [](const Vec2Subgroup& a, const Vec2Subgroup& b) {
    if (a.elements.size() != b.elements.size()) {
      return a.elements.size() < b.elements.size();
    }
    return a.elements < b.elements;
  });
  return out;
}

ModMatrixSet gl2_shadow(int n, const std::vector<Endo>& gens, long cap) {
  std::vector<ModMatrix> mats;
  mats.reserve(gens.size());
  for (const Endo& g : gens) {
    if (g.rank() != n) {
      throw RankMismatch("gl2_shadow: generator of rank " + std::to_string(g.rank()));
    }
    mats.push_back(mod_reduce(abelianize(g), 2));
  }
  ModMatrixSet out;
  out.dim = n;
  out.modulus = 2;
  out.elements = bfs_closure(
      mats, ModMatrix::identity(n, 2),
      [](const ModMatrix& a, const ModMatrix& b) { return mod_mul(a, b); }, cap);
  return out;
}

EndoSet normal_closure_in_finite(const EndoSet& group, const Endo& x) {
  EndoSet out;
  out.rank = group.rank;
  out.elements = normal_closure_impl(
      group.elements, x, Endo::identity(group.rank),
      [](const Endo& a, const Endo& b) { return compose(a, b); });
  return out;
}

ModMatrixSet normal_closure_in_finite(const ModMatrixSet& group, const ModMatrix& x) {
  ModMatrixSet out;
  out.dim = group.dim;
  out.modulus = group.modulus;
  out.elements = normal_closure_impl(
      group.elements, x, ModMatrix::identity(group.dim, group.modulus),
      [](const ModMatrix& a, const ModMatrix& b) { return mod_mul(a, b); });
  return out;
}

}  // namespace autfn
