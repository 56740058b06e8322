#ifndef ANALYTICA_ERRORS_HPP
#define ANALYTICA_ERRORS_HPP

#include <stdexcept>
#include <string>

namespace analytica {

/// Base class for all library errors.
class error : public std::runtime_error {
 public:
  explicit error(const std::string& what) : std::runtime_error(what) {}
};

/// Mixing exact-rational and float64 values in one operation.
class kind_mismatch_error : public error {
 public:
  kind_mismatch_error(const std::string& lhs, const std::string& rhs)
      : error("scalar kind mismatch: " + lhs + " vs " + rhs) {}
};

/// Tail majorant M*rho^k does not sum at the requested point (|t|*rho >= 1).
class divergent_majorant_error : public error {
 public:
  explicit divergent_majorant_error(const std::string& what) : error(what) {}
};

/// Operation needs a longer coefficient prefix than supplied.
class insufficient_data_error : public error {
 public:
  explicit insufficient_data_error(const std::string& what) : error(what) {}
};

/// Derivative of an order-0 series has no representable coefficients.
class empty_derivative_error : public error {
 public:
  empty_derivative_error() : error("derivative of an order-0 series is empty") {}
};

/// Witness block search ran out of prefix before block `block` closed.
class insufficient_prefix_error : public error {
 public:
  explicit insufficient_prefix_error(int block)
      : error("coefficient prefix exhausted before block " +
              std::to_string(block) + " reached its target sum"),
        block_(block) {}
  int block() const { return block_; }

 private:
  int block_;
};

/// Divergence-combination selection impossible within the family at step `m`.
class insufficient_family_error : public error {
 public:
  explicit insufficient_family_error(int m)
      : error("no family member exceeds the selection threshold at step m = " +
              std::to_string(m)),
        m_(m) {}
  int m() const { return m_; }

 private:
  int m_;
};

/// Composition referenced a derivative order or curve coefficient that is
/// not present in the supplied data.
class truncation_data_error : public error {
 public:
  truncation_data_error(int k, int n)
      : error("composition needs derivative degree " + std::to_string(k) +
              " and curve coefficient " + std::to_string(n) +
              " which are not available"),
        k_(k),
        n_(n) {}
  int degree() const { return k_; }
  int part() const { return n_; }

 private:
  int k_, n_;
};

/// Inner series of a composition must have zero constant term.
class composition_domain_error : public error {
 public:
  composition_domain_error()
      : error("inner series of a composition must have zero constant term") {}
};

/// Vector/argument dimensions disagree with the declared shape.
class dimension_mismatch_error : public error {
 public:
  explicit dimension_mismatch_error(const std::string& what) : error(what) {}
};

/// Malformed input file or literal.
class parse_error : public error {
 public:
  explicit parse_error(const std::string& what) : error(what) {}
};

}  // namespace analytica

#endif  // ANALYTICA_ERRORS_HPP
