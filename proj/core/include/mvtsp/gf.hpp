#ifndef MVTSP_GF_HPP
#define MVTSP_GF_HPP

#include <cstdint>
#include <utility>
#include <vector>

namespace mvtsp {
namespace gf {

using Elem = std::uint64_t;  // t-bit polynomial over GF(2), bits < 2^t

// Arithmetic context for GF(2^t), 1 <= t <= 63.
//
// The modulus is the lexicographically least irreducible polynomial of
// degree t over GF(2) (compared as integers with the x^t bit included), found
// by search and verified with the x^(2^i) == x criterion at construction, so
// the field is identical across runs and platforms. For t <= 16 log/exp
// tables over a precomputed generator back multiplication and inversion; for
// larger t multiplication is a carryless product reduced by the modulus,
// using the PCLMUL instruction when the CPU has it and a shift-xor loop
// otherwise. All paths agree bit-exactly.
class FieldCtx {
 public:
  // Throws Error(UnsupportedDegree) unless 1 <= t <= 63.
  explicit FieldCtx(int t);

  int degree() const { return t_; }
  // Modulus bitmask including the leading x^t term.
  std::uint64_t modulus() const { return modulus_; }
  std::uint64_t order() const { return size() - 1; }  // multiplicative order
  std::uint64_t size() const { return std::uint64_t{1} << t_; }

  Elem add(Elem a, Elem b) const { return a ^ b; }
  Elem mul(Elem a, Elem b) const {
    if (!tables_built_) return mul_clmul(a, b);
    if (a == 0 || b == 0) return 0;
    std::uint64_t s = log_[a] + log_[b];
    if (s >= order()) s -= order();
    return exp_[s];
  }
  // Throws Error(DivisionByZero) when a == 0.
  Elem inv(Elem a) const;
  Elem pow(Elem a, std::uint64_t e) const;
  Elem sq(Elem a) const { return mul(a, a); }

  // Multiplication via carryless product + reduction, bypassing the tables;
  // exposed so tests can compare the paths.
  Elem mul_clmul(Elem a, Elem b) const;
  Elem mul_portable(Elem a, Elem b) const;
  static bool has_hardware_clmul();

 private:
  Elem reduce(unsigned __int128 prod) const;
  void build_tables();

  int t_ = 0;
  std::uint64_t modulus_ = 0;
  bool tables_built_ = false;
  std::vector<std::uint32_t> log_;
  std::vector<Elem> exp_;
};

// Determinant over GF(2^t) by Gaussian elimination. In characteristic 2 this
// equals the permanent: the signless sum over permutations of entry products.
// `a` is row-major n x n; a 0 x 0 matrix has determinant 1.
Elem det_char2(const FieldCtx& f, std::vector<Elem> a, int n);

// Coefficients c_0..c_{k-1} of the unique polynomial of degree < k through k
// points with distinct abscissae. Throws Error(DuplicateAbscissa).
std::vector<Elem> lagrange_interpolate(
    const FieldCtx& f, const std::vector<std::pair<Elem, Elem>>& points);

}  // namespace gf
}  // namespace mvtsp

#endif  // MVTSP_GF_HPP
