#include "autfn/perm.hpp"

#include <algorithm>
#include <cctype>
#include <numeric>

namespace autfn {

Perm::Perm(int size) {
  if (size < 1) throw BadIndices("permutation size must be >= 1");
  map_.resize(static_cast<std::size_t>(size));
  std::iota(map_.begin(), map_.end(), 0);
}

Perm Perm::from_mapping(const std::vector<int>& images) {
  Perm p(static_cast<int>(images.size()));
  std::vector<bool> seen(images.size(), false);
  for (std::size_t i = 0; i < images.size(); ++i) {
    int v = images[i];
    if (v < 1 || v > static_cast<int>(images.size()) || seen[static_cast<std::size_t>(v - 1)]) {
      throw BadIndices("mapping is not a bijection of 1.." + std::to_string(images.size()));
    }
    seen[static_cast<std::size_t>(v - 1)] = true;
    p.map_[i] = v - 1;
  }
  return p;
}

Perm Perm::from_cycles(const std::vector<std::vector<int>>& cycles, int size) {
  Perm p(size);
  std::vector<bool> touched(static_cast<std::size_t>(size), false);
  for (const auto& cyc : cycles) {
    for (std::size_t k = 0; k < cyc.size(); ++k) {
      int from = cyc[k];
      int to = cyc[(k + 1) % cyc.size()];
      if (from < 1 || from > size || to < 1 || to > size) {
        throw SemanticError("cycle entry outside 1.." + std::to_string(size));
      }
      if (touched[static_cast<std::size_t>(from - 1)]) {
        throw SemanticError("cycles are not disjoint at " + std::to_string(from));
      }
      touched[static_cast<std::size_t>(from - 1)] = true;
      p.map_[static_cast<std::size_t>(from - 1)] = to - 1;
    }
  }
  return p;
}

Perm Perm::parse_cycles(std::string_view text, int size) {
  std::vector<std::vector<int>> cycles;
  std::size_t i = 0;
  auto skip_ws = [&] {
    while (i < text.size() && std::isspace(static_cast<unsigned char>(text[i]))) ++i;
  };
  skip_ws();
  while (i < text.size()) {
    if (text[i] != '(') throw ParseError("expected '(' in cycle notation", i);
    ++i;
    std::vector<int> cyc;
    skip_ws();
    while (i < text.size() && text[i] != ')') {
      if (!std::isdigit(static_cast<unsigned char>(text[i]))) {
        throw ParseError("expected integer in cycle", i);
      }
      int v = 0;
      while (i < text.size() && std::isdigit(static_cast<unsigned char>(text[i]))) {
        v = v * 10 + (text[i] - '0');
        ++i;
      }
      cyc.push_back(v);
      skip_ws();
    }
    if (i >= text.size()) throw ParseError("unterminated cycle", i);
    ++i;  // ')'
    if (!cyc.empty()) cycles.push_back(std::move(cyc));
    skip_ws();
  }
  return from_cycles(cycles, size);
}

int Perm::image_of(int i) const {
  if (i < 1 || i > size()) throw BadIndices("permutation argument outside 1.." + std::to_string(size()));
  return map_[static_cast<std::size_t>(i - 1)] + 1;
}

bool Perm::is_identity() const {
  for (std::size_t i = 0; i < map_.size(); ++i) {
    if (map_[i] != static_cast<int>(i)) return false;
  }
  return true;
}

Perm Perm::then(const Perm& q) const {
  if (size() != q.size()) throw RankMismatch("composing permutations of different sizes");
  Perm r(size());
  for (std::size_t i = 0; i < map_.size(); ++i) {
    r.map_[i] = q.map_[static_cast<std::size_t>(map_[i])];
  }
  return r;
}

Perm Perm::inverse() const {
  Perm r(size());
  for (std::size_t i = 0; i < map_.size(); ++i) {
    r.map_[static_cast<std::size_t>(map_[i])] = static_cast<int>(i);
  }
  return r;
}

std::string Perm::cycle_string() const {
  std::string out;
  std::vector<bool> done(map_.size(), false);
  for (std::size_t start = 0; start < map_.size(); ++start) {
    if (done[start] || map_[start] == static_cast<int>(start)) continue;
    out.push_back('(');
    std::size_t cur = start;
    bool first = true;
    do {
      if (!first) out.push_back(' ');
      out += std::to_string(cur + 1);
      done[cur] = true;
      cur = static_cast<std::size_t>(map_[cur]);
      first = false;
    } while (cur != start);
    out.push_back(')');
  }
  return out.empty() ? "()" : out;
}

std::vector<Perm> Perm::all(int size) {
  std::vector<int> images(static_cast<std::size_t>(size));
  std::iota(images.begin(), images.end(), 1);
  std::vector<Perm> out;
  do {
    out.push_back(from_mapping(images));
  } while (std::next_permutation(images.begin(), images.end()));
  return out;
}

}  // namespace autfn
