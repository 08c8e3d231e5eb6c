#include "autfn/generators.hpp"

namespace autfn {

namespace {

void check_pair(int i, int j, int n) {
  if (n < 1) throw BadIndices("rank must be >= 1");
  if (i < 1 || j < 1 || i > n || j > n) {
    throw BadIndices("indices (" + std::to_string(i) + ", " + std::to_string(j) +
                     ") outside 1.." + std::to_string(n));
  }
  if (i == j) throw BadIndices("Nielsen move needs i != j");
}

std::vector<Word> identity_images(int n) {
  std::vector<Word> images;
  images.reserve(static_cast<std::size_t>(n));
  for (int k = 1; k <= n; ++k) images.push_back(Word::generator(k, n));
  return images;
}

}  // namespace

Endo lambda(int i, int j, int n) {
  check_pair(i, j, n);
  auto images = identity_images(n);
  images[static_cast<std::size_t>(i - 1)] =
      Word::reduced({Letter{j, +1}, Letter{i, +1}}, n);
  return Endo(n, std::move(images));
}

Endo rho(int i, int j, int n) {
  check_pair(i, j, n);
  auto images = identity_images(n);
  images[static_cast<std::size_t>(i - 1)] =
      Word::reduced({Letter{i, +1}, Letter{j, +1}}, n);
  return Endo(n, std::move(images));
}

Endo eps(int i, int n) {
  if (i < 1 || i > n) {
    throw BadIndices("index " + std::to_string(i) + " outside 1.." + std::to_string(n));
  }
  auto images = identity_images(n);
  images[static_cast<std::size_t>(i - 1)] = Word::generator(i, n, -1);
  return Endo(n, std::move(images));
}

Endo perm_endo(const Perm& p, int n) {
  if (p.size() != n) {
    throw RankMismatch("permutation size " + std::to_string(p.size()) + " vs rank " +
                       std::to_string(n));
  }
  std::vector<Word> images;
  images.reserve(static_cast<std::size_t>(n));
  for (int j = 1; j <= n; ++j) images.push_back(Word::generator(p.image_of(j), n));
  return Endo(n, std::move(images));
}

Endo special(Special s, int n) {
  switch (s) {
    case Special::Iota: {
      if (n < 2) throw UnsupportedRank("iota needs rank >= 2");
      return perm_endo(Perm::from_cycles({{1, 2}}, n), n);
    }
    case Special::Z: {
      if (n < 1) throw UnsupportedRank("z needs rank >= 1");
      std::vector<Word> images;
      for (int i = 1; i <= n; ++i) images.push_back(Word::generator(i, n, -1));
      return Endo(n, std::move(images));
    }
    case Special::Alpha: {
      if (n != 3) throw UnsupportedRank("alpha is defined at rank 3 only");
      return Endo(3, {Word::reduced({{1, -1}}, 3),
                      Word::reduced({{3, +1}, {1, -1}}, 3),
                      Word::reduced({{2, +1}, {1, -1}}, 3)});
    }
    case Special::Beta: {
      if (n != 3) throw UnsupportedRank("beta is defined at rank 3 only");
      return Endo(3, {Word::reduced({{3, +1}, {2, -1}}, 3),
                      Word::reduced({{2, -1}}, 3),
                      Word::reduced({{1, +1}, {2, -1}}, 3)});
    }
    case Special::Theta: {
      if (n < 3) throw UnsupportedRank("theta needs rank >= 3");
      auto images = identity_images(n);
      for (int i = 3; i <= n; ++i) {
        images[static_cast<std::size_t>(i - 1)] =
            Word::reduced({Letter{2, +1}, Letter{i, +1}}, n);
      }
      return Endo(n, std::move(images));
    }
  }
  throw UnsupportedRank("unknown special generator");
}

Endo lemma3_embed(const Perm& tau, int n) {
  if (tau.size() != n + 1) {
    throw RankMismatch("lemma3_embed: permutation size " + std::to_string(tau.size()) +
                       ", expected " + std::to_string(n + 1));
  }
  int tail = tau.image_of(n + 1);
  std::vector<Word> images;
  images.reserve(static_cast<std::size_t>(n));
  for (int i = 1; i <= n; ++i) {
    std::vector<Letter> raw;
    int head = tau.image_of(i);
    if (head <= n) raw.push_back(Letter{head, +1});
    if (tail <= n) raw.push_back(Letter{tail, -1});
    images.push_back(Word::reduced(raw, n));
  }
  return Endo(n, std::move(images));
}

}  // namespace autfn
