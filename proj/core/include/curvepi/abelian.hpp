#ifndef CURVEPI_ABELIAN_HPP_
#define CURVEPI_ABELIAN_HPP_

#include <cstddef>
#include <string>
#include <vector>

#include <boost/multiprecision/cpp_int.hpp>
#include <nlohmann/json_fwd.hpp>

#include "curvepi/presentation.hpp"

namespace curvepi {

  using BigInt = boost::multiprecision::cpp_int;

  class IntMatrix {
   public:
    IntMatrix() = default;
    IntMatrix(std::size_t rows, std::size_t cols);
    IntMatrix(std::initializer_list<std::initializer_list<long>> rows);

    static IntMatrix identity(std::size_t n);

    std::size_t rows() const noexcept {
      return rows_;
    }
    std::size_t cols() const noexcept {
      return cols_;
    }
    BigInt& operator()(std::size_t i, std::size_t j) {
      return data_[i * cols_ + j];
    }
    BigInt const& operator()(std::size_t i, std::size_t j) const {
      return data_[i * cols_ + j];
    }

    void swap_rows(std::size_t a, std::size_t b);
    void swap_cols(std::size_t a, std::size_t b);
    // row[dst] += k * row[src]
    void add_row(std::size_t dst, std::size_t src, BigInt const& k);
    void add_col(std::size_t dst, std::size_t src, BigInt const& k);
    void negate_row(std::size_t i);

    bool is_diagonal() const;

    friend IntMatrix operator*(IntMatrix const& a, IntMatrix const& b);
    friend bool operator==(IntMatrix const&, IntMatrix const&) = default;

   private:
    std::size_t         rows_ = 0;
    std::size_t         cols_ = 0;
    std::vector<BigInt> data_;
  };

  struct SmithForm {
    IntMatrix D;
    IntMatrix U;  // empty unless tracked
    IntMatrix V;  // empty unless tracked
    std::size_t rank = 0;
  };

  // U * M * V = D with D diagonal, d1 | d2 | ..., all entries >= 0.
  SmithForm smith_normal_form(IntMatrix const& m, bool track_transforms = true);

  // Entry (i, j) is the exponent sum of generator j in relator i.
  IntMatrix relator_matrix(Presentation const& p);

  class InvariantFactors {
   public:
    InvariantFactors() = default;
    // Throws Error unless torsion is a divisor chain of entries >= 2.
    InvariantFactors(std::size_t free_rank, std::vector<BigInt> torsion);

    // Reduces an arbitrary list of cyclic orders (0 means Z, 1 is dropped)
    // to the canonical divisor chain.
    static InvariantFactors from_cyclic_orders(std::vector<BigInt> const& orders);

    std::size_t free_rank() const noexcept {
      return free_rank_;
    }
    std::vector<BigInt> const& torsion() const noexcept {
      return torsion_;
    }
    bool trivial() const noexcept {
      return free_rank_ == 0 && torsion_.empty();
    }
    // Order of a finite group, 0 when infinite.
    BigInt order() const;

    friend bool operator==(InvariantFactors const&, InvariantFactors const&) = default;

   private:
    std::size_t         free_rank_ = 0;
    std::vector<BigInt> torsion_;
  };

  InvariantFactors direct_sum(InvariantFactors const& a, InvariantFactors const& b);

  // "Z^3", "Z + Z/2", "Z/5", "0".
  std::string to_string(InvariantFactors const& f);
  nlohmann::json to_json(InvariantFactors const& f);
  InvariantFactors invariant_factors_from_json(nlohmann::json const& j);

  InvariantFactors abelian_invariants(Presentation const& p);

  // Z^(r-1) + Z/gcd(degrees) for a curve with r components.
  InvariantFactors curve_abelianization(std::vector<unsigned> const& degrees);

  // Image of words in the abelianization of a fixed presentation.
  class AbelianizationMap {
   public:
    explicit AbelianizationMap(Presentation const& p);

    InvariantFactors const& invariants() const noexcept {
      return invariants_;
    }
    // Coordinates in Z/d1 + ... + Z^r, torsion coordinates reduced.
    std::vector<BigInt> coordinates(Word const& w) const;
    bool                is_trivial(Word const& w) const;

   private:
    std::size_t         ngens_ = 0;
    SmithForm           snf_;
    InvariantFactors    invariants_;
  };

}  // namespace curvepi

#endif  // CURVEPI_ABELIAN_HPP_
