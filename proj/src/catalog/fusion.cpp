#include "axial/catalog/fusion.hpp"

#include <stdexcept>

namespace axial {

FusionLaw::FusionLaw(std::vector<Scalar> eigenvalues, std::vector<std::vector<unsigned>> rule,
                     std::vector<bool> minus_part)
    : eigenvalues_(std::move(eigenvalues)), rule_(std::move(rule)), minus_(std::move(minus_part)) {
  const auto n = eigenvalues_.size();
  if (rule_.size() != n || minus_.size() != n) throw std::invalid_argument("FusionLaw: size mismatch");
  for (const auto& r : rule_)
    if (r.size() != n) throw std::invalid_argument("FusionLaw: rule is not square");
}

const FusionLaw& FusionLaw::monster() {
  // Positions: 0 -> 1, 1 -> 0, 2 -> 1/4, 3 -> 1/32.
  constexpr unsigned one = 1, zero = 2, quarter = 4, t = 8;
  static const FusionLaw law({Scalar(1), Scalar(0), Scalar(1, 4), Scalar(1, 32)},
                             {{one, 0, quarter, t},
                              {0, zero, quarter, t},
                              {quarter, quarter, one | zero, t},
                              {t, t, t, one | zero | quarter}},
                             {false, false, false, true});
  return law;
}

std::size_t FusionLaw::position(const Scalar& v) const {
  for (std::size_t i = 0; i < eigenvalues_.size(); ++i)
    if (eigenvalues_[i] == v) return i;
  return eigenvalues_.size();
}

bool FusionLaw::is_symmetric() const {
  for (std::size_t i = 0; i < size(); ++i)
    for (std::size_t j = 0; j < size(); ++j)
      if (rule_[i][j] != rule_[j][i]) return false;
  return true;
}

bool FusionLaw::is_graded() const {
  bool has_minus = false, has_plus = false;
  for (bool m : minus_) (m ? has_minus : has_plus) = true;
  if (!has_minus || !has_plus) return false;
  for (std::size_t i = 0; i < size(); ++i)
    for (std::size_t j = 0; j < size(); ++j) {
      bool sign = minus_[i] != minus_[j];
      for (std::size_t k = 0; k < size(); ++k)
        if ((rule_[i][j] >> k & 1u) && minus_[k] != sign) return false;
    }
  return true;
}

}  // namespace axial
