#include "curvepi/word.hpp"

#include <algorithm>

namespace curvepi {

  Word free_reduce(std::span<Letter const> letters) {
    return Word(letters);
  }

  Word::Word(std::span<Letter const> letters) {
    letters_.reserve(letters.size());
    for (Letter x : letters) {
      if (!letters_.empty() && letters_.back().cancels(x)) {
        letters_.pop_back();
      } else {
        letters_.push_back(x);
      }
    }
  }

  Word::Word(std::initializer_list<Letter> letters)
      : Word(std::span<Letter const>(letters.begin(), letters.size())) {}

  Word Word::generator(GenIndex g, long exponent) {
    Word w;
    Letter x{g, static_cast<std::int8_t>(exponent < 0 ? -1 : 1)};
    w.letters_.assign(static_cast<std::size_t>(exponent < 0 ? -exponent : exponent), x);
    return w;
  }

  Word Word::inverse() const {
    Word w;
    w.letters_.reserve(letters_.size());
    for (auto it = letters_.rbegin(); it != letters_.rend(); ++it) {
      w.letters_.push_back(it->inverse());
    }
    return w;
  }

  Word Word::pow(long n) const {
    Word base = n < 0 ? inverse() : *this;
    Word result;
    for (long i = 0; i < (n < 0 ? -n : n); ++i) {
      result *= base;
    }
    return result;
  }

  Word Word::subword(std::size_t pos, std::size_t len) const {
    pos = std::min(pos, letters_.size());
    len = std::min(len, letters_.size() - pos);
    Word w;
    w.letters_.assign(letters_.begin() + pos, letters_.begin() + pos + len);
    return w;
  }

  Word Word::cyclically_reduced() const {
    std::size_t lo = 0;
    std::size_t hi = letters_.size();
    while (hi - lo >= 2 && letters_[lo].cancels(letters_[hi - 1])) {
      ++lo;
      --hi;
    }
    return subword(lo, hi - lo);
  }

  Word Word::rotated(std::size_t k) const {
    Word c = cyclically_reduced();
    if (c.empty()) {
      return c;
    }
    k %= c.size();
    std::rotate(c.letters_.begin(), c.letters_.begin() + k, c.letters_.end());
    return c;
  }

  Word Word::cyclic_canonical() const {
    Word c = cyclically_reduced();
    std::size_t const n = c.size();
    if (n < 2) {
      return c;
    }
    // Booth-free quadratic scan; relators are short.
    std::size_t best = 0;
    for (std::size_t k = 1; k < n; ++k) {
      for (std::size_t i = 0; i < n; ++i) {
        Letter x = c.letters_[(k + i) % n];
        Letter y = c.letters_[(best + i) % n];
        if (x != y) {
          if (x < y) {
            best = k;
          }
          break;
        }
      }
    }
    std::rotate(c.letters_.begin(), c.letters_.begin() + best, c.letters_.end());
    return c;
  }

  Word Word::relator_canonical() const {
    Word a = cyclic_canonical();
    Word b = inverse().cyclic_canonical();
    return shortlex_less(b, a) ? b : a;
  }

  long Word::exponent_sum(GenIndex g) const noexcept {
    long s = 0;
    for (Letter x : letters_) {
      if (x.gen == g) {
        s += x.sign;
      }
    }
    return s;
  }

  std::size_t Word::occurrences(GenIndex g) const noexcept {
    return static_cast<std::size_t>(std::count_if(
        letters_.begin(), letters_.end(), [g](Letter x) { return x.gen == g; }));
  }

  GenIndex Word::generator_bound() const noexcept {
    GenIndex b = 0;
    for (Letter x : letters_) {
      b = std::max(b, x.gen + 1);
    }
    return b;
  }

  Word& Word::operator*=(Word const& rhs) {
    std::size_t i = 0;
    while (i < rhs.letters_.size() && !letters_.empty()
           && letters_.back().cancels(rhs.letters_[i])) {
      letters_.pop_back();
      ++i;
    }
    letters_.insert(letters_.end(), rhs.letters_.begin() + i, rhs.letters_.end());
    return *this;
  }

  bool shortlex_less(Word const& x, Word const& y) {
    if (x.size() != y.size()) {
      return x.size() < y.size();
    }
    return x < y;
  }

  Word commutator(Word const& u, Word const& v) {
    return u * v * u.inverse() * v.inverse();
  }

  Word alternating(Word const& u, Word const& v, unsigned m) {
    Word w;
    for (unsigned i = 0; i < m; ++i) {
      w *= (i % 2 == 0) ? u : v;
    }
    return w;
  }

}  // namespace curvepi

std::size_t std::hash<curvepi::Word>::operator()(
    curvepi::Word const& w) const noexcept {
  std::size_t h = 1469598103934665603ULL;
  for (auto x : w.letters()) {
    h ^= x.column() + 1;
    h *= 1099511628211ULL;
  }
  return h;
}
