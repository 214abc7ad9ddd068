#pragma once

#include <optional>
#include <string>
#include <vector>

#include "axial/catalog/algebra.hpp"
#include "axial/engine/partial.hpp"

namespace axial {

struct ConstructCaps {
  std::size_t max_dim = 2500;    // largest space an expansion may create
  std::size_t max_rounds = 8;    // expansions
};

/// Reads AXIAL_MAX_DIM / AXIAL_MAX_ROUNDS on top of the defaults.
ConstructCaps caps_from_env();

enum class Outcome { Completed, Collapsed, Incomplete };
std::string to_string(Outcome o);

enum class FormKind { None, Positive, Semidefinite, Indefinite };
std::string to_string(FormKind k);

struct FormInfo {
  FormKind kind = FormKind::None;
  bool unique = false;  // determined by the axis values alone
  Matrix gram;
  Inertia inertia;
  [[nodiscard]] std::size_t radical_dim() const { return kind == FormKind::None ? 0 : inertia.zero; }
};

struct Verification {
  bool axes = false;        // idempotent, semisimple, fusion law, grading
  bool primitive = false;
  bool miyamoto = false;    // tau_a equals the action of tau(a)
  bool automorphisms = false;
  bool pair_types = false;  // <<a, b>> has the type the shape prescribes
  std::vector<std::string> defects;
  [[nodiscard]] bool ok() const { return axes && miyamoto && automorphisms && pair_types; }
};

struct Construction {
  Outcome outcome = Outcome::Incomplete;
  std::string reason;
  std::vector<std::size_t> trace;  // dim after every expansion and reduction
  PartialAlgebra partial;
  std::optional<Algebra> algebra;  // when completed
  std::optional<std::size_t> m;    // closure length
  Verification verification;
  FormInfo form;
  /// 0 for a collapse; the last dimension reached when incomplete.
  [[nodiscard]] std::size_t dim() const { return outcome == Outcome::Collapsed ? 0 : partial.dim; }
};

Construction construct(const Shape& shape, const ConstructCaps& caps = {});

/// The complete partial algebra as an algebra.
Algebra to_algebra(const PartialAlgebra& p);

Verification verify(const PartialAlgebra& p, const Algebra& alg, const Shape& shape);

/// Smallest m with A = P_m, where P_1 is the span of the axes and
/// P_k = P_{k-1} + sum_{i <= k/2} P_i P_{k-i}; nullopt when the axes do not
/// generate A.
std::optional<std::size_t> closure_length(const Algebra& alg, const std::vector<SparseVec>& axes);

/// Dimension of the subalgebra generated by the given vectors.
std::size_t generated_dim(const Algebra& alg, const std::vector<SparseVec>& gens);

/// Frobenius form with (a, a) = 1 and (a, b) the form value of the dihedral
/// algebra of type shape(a, b); None when no such form exists.
FormInfo frobenius_form(const Algebra& alg, const PartialAlgebra& p, const Shape& shape);

struct RadicalQuotient {
  std::size_t radical_dim = 0;
  bool ideal = false;  // the radical is closed under multiplication by A
  bool collapsed = false;
  PartialAlgebra quotient;
};

RadicalQuotient radical_quotient(const PartialAlgebra& p, const Matrix& gram);

}  // namespace axial
