#include "autfn/word.hpp"

#include <algorithm>
#include <cctype>

namespace autfn {

Word::Word(int rank) : rank_(rank) {
  if (rank < 1) throw IndexOutOfRank("word rank must be >= 1, got " + std::to_string(rank));
}

Word::Word(int rank, std::vector<Letter> already_reduced)
    : rank_(rank), letters_(std::move(already_reduced)) {}

Word Word::reduced(const std::vector<Letter>& raw, int rank) {
  Word w(rank);
  std::vector<Letter> stack;
  stack.reserve(raw.size());
  for (const Letter& l : raw) {
    if (l.index < 1 || l.index > rank) {
      throw IndexOutOfRank("letter index " + std::to_string(l.index) +
                           " outside 1.." + std::to_string(rank));
    }
    if (l.sign != 1 && l.sign != -1) {
      throw IndexOutOfRank("letter sign must be +1 or -1");
    }
    if (!stack.empty() && stack.back() == inverse(l)) {
      stack.pop_back();
    } else {
      stack.push_back(l);
    }
  }
  w.letters_ = std::move(stack);
  return w;
}

Word Word::generator(int index, int rank, int sign) {
  return reduced({Letter{index, sign}}, rank);
}

Word Word::parse(std::string_view text, int rank) {
  std::vector<std::string> tokens;
  std::string cur;
  for (char c : text) {
    if (std::isspace(static_cast<unsigned char>(c))) {
      if (!cur.empty()) tokens.push_back(std::move(cur)), cur.clear();
    } else {
      cur.push_back(c);
    }
  }
  if (!cur.empty()) tokens.push_back(std::move(cur));

  if (tokens.size() == 1 && tokens[0] == "1") return Word(rank);

  std::vector<Letter> letters;
  std::size_t pos = 0;
  for (const std::string& t : tokens) {
    std::string_view s = t;
    int sign = +1;
    if (s.size() >= 2 && s.back() == '\'') {
      sign = -1;
      s.remove_suffix(1);
    }
    if (s.size() < 2 || s[0] != 'a' ||
        !std::all_of(s.begin() + 1, s.end(),
                     [](char c) { return std::isdigit(static_cast<unsigned char>(c)); })) {
      throw ParseError("bad word letter '" + t + "'", pos);
    }
    int index = std::stoi(std::string(s.substr(1)));
    letters.push_back(Letter{index, sign});
    pos += t.size() + 1;
  }
  return reduced(letters, rank);
}

std::string Word::str() const {
  if (letters_.empty()) return "1";
  std::string out;
  for (const Letter& l : letters_) {
    if (!out.empty()) out.push_back(' ');
    out += "a" + std::to_string(l.index);
    if (l.sign < 0) out.push_back('\'');
  }
  return out;
}

int compare(const Word& a, const Word& b) {
  if (a.rank() != b.rank()) return a.rank() < b.rank() ? -1 : 1;
  if (a.length() != b.length()) return a.length() < b.length() ? -1 : 1;
  for (int k = 0; k < a.length(); ++k) {
    int c = compare(a.letters()[k], b.letters()[k]);
    if (c != 0) return c;
  }
  return 0;
}

Word concat(const Word& u, const Word& v) {
  if (u.rank() != v.rank()) {
    throw RankMismatch("concat: ranks " + std::to_string(u.rank()) + " vs " +
                       std::to_string(v.rank()));
  }
  std::vector<Letter> raw;
  raw.reserve(u.letters().size() + v.letters().size());
  raw.insert(raw.end(), u.letters().begin(), u.letters().end());
  raw.insert(raw.end(), v.letters().begin(), v.letters().end());
  return Word::reduced(raw, u.rank());
}

Word invert(const Word& w) {
  std::vector<Letter> raw(w.letters().rbegin(), w.letters().rend());
  for (Letter& l : raw) l.sign = -l.sign;
  return Word::reduced(raw, w.rank());
}

std::vector<long long> exponent_sums(const Word& w) {
  std::vector<long long> sums(static_cast<std::size_t>(w.rank()), 0);
  for (const Letter& l : w.letters()) sums[static_cast<std::size_t>(l.index - 1)] += l.sign;
  return sums;
}

int cancellation(const Word& u, const Word& v) {
  int c = 0;
  int max = std::min(u.length(), v.length());
  while (c < max && u.letters()[static_cast<std::size_t>(u.length() - 1 - c)] ==
                        inverse(v.letters()[static_cast<std::size_t>(c)])) {
    ++c;
  }
  return c;
}

}  // namespace autfn
