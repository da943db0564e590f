#include "outfn/word.hpp"

#include <cstdlib>
#include <string>

namespace outfn {

void check_rank(int expected, int actual, const char* what) {
  if (expected != actual) {
    throw RankError(std::string(what) + ": rank mismatch (" + std::to_string(expected) +
                    " vs " + std::to_string(actual) + ")");
  }
}

Word::Word(int rank) : rank_(rank) {
  if (rank < 1) throw RankError("word rank must be at least 1");
}

Word Word::reduce(int rank, std::span<const int> letters) {
  if (rank < 1) throw RankError("word rank must be at least 1");
  std::vector<int> out;
  out.reserve(letters.size());
  for (int l : letters) {
    if (l == 0 || std::abs(l) > rank) {
      throw RankError("letter " + std::to_string(l) + " outside rank " + std::to_string(rank));
    }
    if (!out.empty() && out.back() == -l) {
      out.pop_back();
    } else {
      out.push_back(l);
    }
  }
  return Word(rank, std::move(out));
}

Word Word::inverse() const {
  std::vector<int> out(letters_.rbegin(), letters_.rend());
  for (int& l : out) l = -l;
  return Word(rank_, std::move(out));
}

Word Word::pow(int k) const {
  Word base = k < 0 ? inverse() : *this;
  Word out(rank_);
  for (int t = 0; t < std::abs(k); ++t) out = out * base;
  return out;
}

Word operator*(const Word& u, const Word& v) {
  check_rank(u.rank_, v.rank_, "word product");
  std::vector<int> out = u.letters_;
  std::size_t k = 0;
  while (k < v.letters_.size() && !out.empty() && out.back() == -v.letters_[k]) {
    out.pop_back();
    ++k;
  }
  out.insert(out.end(), v.letters_.begin() + static_cast<std::ptrdiff_t>(k), v.letters_.end());
  return Word(u.rank_, std::move(out));
}

std::string Word::str() const {
  if (letters_.empty()) return "1";
  std::string s;
  for (std::size_t k = 0; k < letters_.size(); ++k) {
    if (k) s += ' ';
    s += 'a';
    s += std::to_string(std::abs(letters_[k]));
    if (letters_[k] < 0) s += "^-1";
  }
  return s;
}

Word substitute(std::span<const Word> images, const Word& w) {
  check_rank(static_cast<int>(images.size()), w.rank(), "substitute");
  if (images.empty()) return w;
  const int target = images.front().rank();
  std::vector<int> raw;
  for (int l : w.letters()) {
    const Word& img = images[static_cast<std::size_t>(std::abs(l) - 1)];
    check_rank(target, img.rank(), "substitute image");
    if (l > 0) {
      raw.insert(raw.end(), img.letters().begin(), img.letters().end());
    } else {
      for (auto it = img.letters().rbegin(); it != img.letters().rend(); ++it) raw.push_back(-*it);
    }
  }
  return Word::reduce(target, raw);
}

}  // namespace outfn
