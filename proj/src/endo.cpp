#include "autfn/endo.hpp"

namespace autfn {

Endo::Endo(int rank, std::vector<Word> images) : rank_(rank), images_(std::move(images)) {
  if (rank < 1) throw RankMismatch("endomorphism rank must be >= 1");
  if (static_cast<int>(images_.size()) != rank) {
    throw RankMismatch("expected " + std::to_string(rank) + " image words, got " +
                       std::to_string(images_.size()));
  }
  for (const Word& w : images_) {
    if (w.rank() != rank) {
      throw RankMismatch("image word has rank " + std::to_string(w.rank()) +
                         ", expected " + std::to_string(rank));
    }
  }
}

Endo Endo::identity(int rank) {
  std::vector<Word> images;
  images.reserve(static_cast<std::size_t>(rank));
  for (int i = 1; i <= rank; ++i) images.push_back(Word::generator(i, rank));
  return Endo(rank, std::move(images));
}

const Word& Endo::image(int i) const {
  if (i < 1 || i > rank_) {
    throw IndexOutOfRank("basis index " + std::to_string(i) + " outside 1.." +
                         std::to_string(rank_));
  }
  return images_[static_cast<std::size_t>(i - 1)];
}

bool Endo::is_identity() const { return *this == identity(rank_); }

std::string Endo::str() const {
  std::string out;
  for (int i = 1; i <= rank_; ++i) {
    if (i > 1) out += " ; ";
    out += "a" + std::to_string(i) + " -> " + image(i).str();
  }
  return out;
}

int compare(const Endo& a, const Endo& b) {
  if (a.rank() != b.rank()) return a.rank() < b.rank() ? -1 : 1;
  for (int i = 1; i <= a.rank(); ++i) {
    int c = compare(a.image(i), b.image(i));
    if (c != 0) return c;
  }
  return 0;
}

Word apply(const Endo& f, const Word& w) {
  if (f.rank() != w.rank()) {
    throw RankMismatch("apply: endomorphism rank " + std::to_string(f.rank()) +
                       " vs word rank " + std::to_string(w.rank()));
  }
  // Substitute letter by letter, cancelling on the fly.
  std::vector<Letter> stack;
  auto push = [&stack](Letter l) {
    if (!stack.empty() && stack.back() == inverse(l)) {
      stack.pop_back();
    } else {
      stack.push_back(l);
    }
  };
  for (const Letter& l : w.letters()) {
    const Word& img = f.image(l.index);
    if (l.sign > 0) {
      for (const Letter& m : img.letters()) push(m);
    } else {
      for (auto it = img.letters().rbegin(); it != img.letters().rend(); ++it) {
        push(inverse(*it));
      }
    }
  }
  return Word::reduced(stack, w.rank());
}

Endo compose(const Endo& f, const Endo& g) {
  if (f.rank() != g.rank()) {
    throw RankMismatch("compose: ranks " + std::to_string(f.rank()) + " vs " +
                       std::to_string(g.rank()));
  }
  std::vector<Word> images;
  images.reserve(static_cast<std::size_t>(f.rank()));
  for (int i = 1; i <= f.rank(); ++i) images.push_back(apply(g, f.image(i)));
  return Endo(f.rank(), std::move(images));
}

IntMatrix abelianize(const Endo& f) {
  IntMatrix m(f.rank());
  for (int i = 1; i <= f.rank(); ++i) {
    std::vector<long long> row = exponent_sums(f.image(i));
    for (int j = 0; j < f.rank(); ++j) m(i - 1, j) = row[static_cast<std::size_t>(j)];
  }
  return m;
}

long order_with_cap(const Endo& f, long cap) {
  if (cap < 1) throw OrderCapExceeded("order cap must be >= 1");
  Endo p = f;
  for (long k = 1; k <= cap; ++k) {
    if (p.is_identity()) return k;
    p = compose(p, f);
  }
  throw OrderCapExceeded("no order <= " + std::to_string(cap));
}

}  // namespace autfn
