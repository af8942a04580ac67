#include "chief/permutation.hpp"

#include <sstream>

#include "chief/errors.hpp"

namespace chief {

Permutation::Permutation(std::vector<std::uint32_t> images) : images_(std::move(images)) {
  std::vector<bool> seen(images_.size(), false);
  for (auto y : images_) {
    if (y >= images_.size() || seen[y])
      raise(ErrorKind::InvalidPermutation, "image list is not a bijection");
    seen[y] = true;
  }
}

Permutation Permutation::identity(std::size_t degree) {
  std::vector<std::uint32_t> img(degree);
  for (std::size_t i = 0; i < degree; ++i) img[i] = static_cast<std::uint32_t>(i);
  return Permutation(std::move(img));
}

Permutation Permutation::from_cycles(std::size_t degree,
                                     const std::vector<std::vector<std::uint32_t>>& cycles) {
  std::vector<std::uint32_t> img(degree);
  for (std::size_t i = 0; i < degree; ++i) img[i] = static_cast<std::uint32_t>(i);
  std::vector<bool> used(degree, false);
  for (const auto& cyc : cycles) {
    for (auto p : cyc) {
      if (p >= degree)
        raise(ErrorKind::InvalidPermutation, "cycle point " + std::to_string(p) + " out of range");
      if (used[p])
        raise(ErrorKind::InvalidPermutation, "point " + std::to_string(p) + " repeated in cycles");
      used[p] = true;
    }
    for (std::size_t i = 0; i < cyc.size(); ++i) img[cyc[i]] = cyc[(i + 1) % cyc.size()];
  }
  return Permutation(std::move(img));
}

Permutation Permutation::operator*(const Permutation& rhs) const {
  std::vector<std::uint32_t> img(images_.size());
  for (std::size_t x = 0; x < img.size(); ++x) img[x] = images_[rhs.images_[x]];
  Permutation out;
  out.images_ = std::move(img);
  return out;
}

Permutation Permutation::inverse() const {
  std::vector<std::uint32_t> img(images_.size());
  for (std::size_t x = 0; x < img.size(); ++x) img[images_[x]] = static_cast<std::uint32_t>(x);
  Permutation out;
  out.images_ = std::move(img);
  return out;
}

bool Permutation::is_identity() const {
  for (std::size_t x = 0; x < images_.size(); ++x)
    if (images_[x] != x) return false;
  return true;
}

std::vector<std::vector<std::uint32_t>> Permutation::cycles() const {
  std::vector<std::vector<std::uint32_t>> out;
  std::vector<bool> seen(images_.size(), false);
  for (std::uint32_t x = 0; x < images_.size(); ++x) {
    if (seen[x] || images_[x] == x) continue;
    std::vector<std::uint32_t> cyc;
    for (auto y = x; !seen[y]; y = images_[y]) {
      seen[y] = true;
      cyc.push_back(y);
    }
    out.push_back(std::move(cyc));
  }
  return out;
}

std::string Permutation::to_string() const {
  auto cyc = cycles();
  if (cyc.empty()) return "()";
  std::ostringstream os;
  for (const auto& c : cyc) {
    os << '(';
    for (std::size_t i = 0; i < c.size(); ++i) os << (i ? " " : "") << c[i];
    os << ')';
  }
  return os.str();
}

}  // namespace chief
