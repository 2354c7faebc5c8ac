#ifndef CURVEPI_WORD_HPP_
#define CURVEPI_WORD_HPP_

#include <compare>
#include <cstddef>
#include <cstdint>
#include <functional>
#include <initializer_list>
#include <span>
#include <vector>

namespace curvepi {

  using GenIndex = std::uint32_t;

  // A generator or its inverse.
  struct Letter {
    GenIndex     gen  = 0;
    std::int8_t  sign = 1;  // +1 or -1

    constexpr Letter inverse() const noexcept {
      return {gen, static_cast<std::int8_t>(-sign)};
    }
    constexpr bool cancels(Letter other) const noexcept {
      return gen == other.gen && sign == -other.sign;
    }
    // Column of a coset table: g -> 2g, g^-1 -> 2g+1.
    constexpr std::size_t column() const noexcept {
      return 2 * static_cast<std::size_t>(gen) + (sign < 0 ? 1 : 0);
    }
    static constexpr Letter from_column(std::size_t col) noexcept {
      return {static_cast<GenIndex>(col / 2),
              static_cast<std::int8_t>(col % 2 == 0 ? 1 : -1)};
    }

    friend constexpr bool operator==(Letter, Letter) = default;
    // Orders a < a^-1 < b < b^-1 < ...
    friend constexpr std::strong_ordering operator<=>(Letter x, Letter y) {
      return x.column() <=> y.column();
    }
  };

  constexpr Letter gen(GenIndex g) noexcept {
    return {g, 1};
  }
  constexpr Letter inv(GenIndex g) noexcept {
    return {g, -1};
  }

  // Element of a free group, always freely reduced.
  class Word {
   public:
    Word() = default;
    explicit Word(std::span<Letter const> letters);
    Word(std::initializer_list<Letter> letters);

    static Word generator(GenIndex g, long exponent = 1);

    std::span<Letter const> letters() const noexcept {
      return letters_;
    }
    std::size_t size() const noexcept {
      return letters_.size();
    }
    bool empty() const noexcept {
      return letters_.empty();
    }
    Letter operator[](std::size_t i) const noexcept {
      return letters_[i];
    }
    auto begin() const noexcept {
      return letters_.begin();
    }
    auto end() const noexcept {
      return letters_.end();
    }

    Word inverse() const;
    Word pow(long n) const;
    Word subword(std::size_t pos, std::size_t len) const;

    // Strips a conjugating prefix/suffix pair so that first and last letters
    // do not cancel.
    Word cyclically_reduced() const;
    // Cyclic rotation by k positions of the cyclically reduced word.
    Word rotated(std::size_t k) const;
    // Least rotation (under Letter order) of the cyclically reduced word.
    Word cyclic_canonical() const;
    // Least of cyclic_canonical() of this word and of its inverse.
    Word relator_canonical() const;

    long        exponent_sum(GenIndex g) const noexcept;
    std::size_t occurrences(GenIndex g) const noexcept;
    // One more than the largest generator index used, 0 for the identity.
    GenIndex    generator_bound() const noexcept;

    Word& operator*=(Word const& rhs);
    friend Word operator*(Word lhs, Word const& rhs) {
      lhs *= rhs;
      return lhs;
    }

    friend bool operator==(Word const&, Word const&) = default;
    // Lexicographic, for containers; use shortlex_less for shortlex order.
    friend std::strong_ordering operator<=>(Word const& x, Word const& y) {
      return std::lexicographical_compare_three_way(
          x.letters_.begin(), x.letters_.end(), y.letters_.begin(),
          y.letters_.end());
    }

   private:
    std::vector<Letter> letters_;
  };

  // Unique freely reduced representative of an arbitrary letter sequence.
  Word free_reduce(std::span<Letter const> letters);

  bool shortlex_less(Word const& x, Word const& y);

  // [u, v] = u v u^-1 v^-1
  Word commutator(Word const& u, Word const& v);

  // {u, v}^m: the alternating product u v u v ... of length m.
  Word alternating(Word const& u, Word const& v, unsigned m);

}  // namespace curvepi

template <>
struct std::hash<curvepi::Word> {
  std::size_t operator()(curvepi::Word const& w) const noexcept;
};

#endif  // CURVEPI_WORD_HPP_
