#include <array>
#include <cctype>

#include "chief/construct.hpp"
#include "chief/errors.hpp"

namespace chief {

namespace {

// The group was just built and is not yet shared.
GroupPtr named(GroupPtr g, const std::string& name) {
  const_cast<FiniteGroup&>(*g).set_catalogue_name(name);
  return g;
}

Permutation cycle_on(std::size_t degree, std::vector<std::uint32_t> pts) {
  return Permutation::from_cycles(degree, {std::move(pts)});
}

std::vector<std::uint32_t> range(std::uint32_t from, std::uint32_t to) {
  std::vector<std::uint32_t> out;
  for (auto i = from; i < to; ++i) out.push_back(i);
  return out;
}

std::vector<Permutation> symmetric_gens(std::size_t n, std::size_t degree, std::uint32_t shift) {
  std::vector<Permutation> gens;
  if (n >= 2) {
    auto all = range(shift, shift + static_cast<std::uint32_t>(n));
    gens.push_back(cycle_on(degree, all));
    gens.push_back(cycle_on(degree, {shift, shift + 1}));
  }
  return gens;
}

std::vector<Permutation> alternating_gens(std::size_t n, std::size_t degree, std::uint32_t shift) {
  std::vector<Permutation> gens;
  if (n >= 3) {
    gens.push_back(cycle_on(degree, {shift, shift + 1, shift + 2}));
    if (n > 3) {
      auto top = static_cast<std::uint32_t>(n) + shift;
      gens.push_back(cycle_on(degree, n % 2 == 1 ? range(shift, top) : range(shift + 1, top)));
    }
  }
  return gens;
}

std::size_t parse_size(const std::string& digits, const std::string& name) {
  if (digits.empty() || digits.size() > 6) raise(ErrorKind::UnknownName, "unknown group name '" + name + "'");
  for (char c : digits)
    if (!std::isdigit(static_cast<unsigned char>(c))) raise(ErrorKind::UnknownName, "unknown group name '" + name + "'");
  return std::stoul(digits);
}

}  // namespace

GroupPtr cyclic_group(std::size_t n) {
  if (n == 0) raise(ErrorKind::InvalidArgument, "cyclic group of order zero");
  std::vector<Permutation> gens;
  if (n > 1) gens.push_back(cycle_on(n, range(0, static_cast<std::uint32_t>(n))));
  return named(group_from_permutations(gens, n, kDefaultElementCap), "C" + std::to_string(n));
}

GroupPtr symmetric_group(std::size_t n, std::size_t cap) {
  if (n == 0) raise(ErrorKind::InvalidArgument, "symmetric group on zero points");
  return named(group_from_permutations(symmetric_gens(n, n, 0), n, cap), "S" + std::to_string(n));
}

GroupPtr alternating_group(std::size_t n, std::size_t cap) {
  if (n == 0) raise(ErrorKind::InvalidArgument, "alternating group on zero points");
  return named(group_from_permutations(alternating_gens(n, n, 0), n, cap), "A" + std::to_string(n));
}

GroupPtr klein_four_group() {
  std::vector<Permutation> gens{Permutation::from_cycles(4, {{0, 1}, {2, 3}}),
                                Permutation::from_cycles(4, {{0, 2}, {1, 3}})};
  return named(group_from_permutations(gens, 4), "V4");
}

GroupPtr dihedral_group(std::size_t order) {
  if (order < 4 || order % 2 != 0) raise(ErrorKind::UnknownName, "dihedral group needs even order >= 4");
  if (order == 4) return named(group_from_permutations({Permutation::from_cycles(4, {{0, 1}, {2, 3}}),
                                                         Permutation::from_cycles(4, {{0, 2}, {1, 3}})}, 4),
                               "D4");
  const auto m = static_cast<std::uint32_t>(order / 2);
  std::vector<std::uint32_t> reflect(m);
  for (std::uint32_t x = 0; x < m; ++x) reflect[x] = (m - x) % m;
  std::vector<Permutation> gens{cycle_on(m, range(0, m)), Permutation(reflect)};
  return named(group_from_permutations(gens, m), "D" + std::to_string(order));
}

GroupPtr quaternion_group() {
  // index = sign * 4 + unit, units 1, i, j, k
  static constexpr std::array<std::array<int, 4>, 4> unit_sign{{{1, 1, 1, 1}, {1, -1, 1, -1}, {1, -1, -1, 1}, {1, 1, -1, -1}}};
  static constexpr std::array<std::array<int, 4>, 4> unit_prod{{{0, 1, 2, 3}, {1, 0, 3, 2}, {2, 3, 0, 1}, {3, 2, 1, 0}}};
  auto left_mult = [](std::uint32_t q) {
    std::vector<std::uint32_t> img(8);
    const int s1 = q / 4, u1 = q % 4;
    for (std::uint32_t x = 0; x < 8; ++x) {
      const int s2 = x / 4, u2 = x % 4;
      int sign = (s1 ^ s2) ? -1 : 1;
      sign *= unit_sign[u1][u2];
      img[x] = static_cast<std::uint32_t>((sign < 0 ? 4 : 0) + unit_prod[u1][u2]);
    }
    return Permutation(img);
  };
  return named(group_from_permutations({left_mult(1), left_mult(2)}, 8), "Q8");
}

GroupPtr special_linear_group_2(std::uint32_t p) {
  if (p < 2) raise(ErrorKind::InvalidArgument, "field size must be prime");
  for (std::uint32_t d = 2; d * d <= p; ++d)
    if (p % d == 0) raise(ErrorKind::InvalidArgument, "field size must be prime");
  // action on the nonzero vectors of F_p^2
  const std::uint32_t points = p * p - 1;
  auto index = [p](std::uint32_t x, std::uint32_t y) { return x * p + y - 1; };
  std::vector<std::uint32_t> t(points), s(points);
  for (std::uint32_t x = 0; x < p; ++x)
    for (std::uint32_t y = 0; y < p; ++y) {
      if (x == 0 && y == 0) continue;
      t[index(x, y)] = index((x + y) % p, y);
      s[index(x, y)] = index((p - y) % p, x);
    }
  return named(group_from_permutations({Permutation(t), Permutation(s)}, points),
               "SL(2," + std::to_string(p) + ")");
}

GroupPtr extraspecial_32() {
  auto q8 = quaternion_group();
  Elem minus_one = 0;
  for (Elem e = 1; e < q8->order(); ++e)
    if (q8->element_order(e) == 2) minus_one = e;
  return named(central_product(q8, q8, {{minus_one, minus_one}}), "Q8oQ8");
}

GroupPtr wreath_with_c2(std::size_t n, bool alternating) {
  const std::size_t degree = 2 * n;
  auto gens = alternating ? alternating_gens(n, degree, 0) : symmetric_gens(n, degree, 0);
  std::vector<std::vector<std::uint32_t>> swap;
  for (std::uint32_t i = 0; i < n; ++i) swap.push_back({i, static_cast<std::uint32_t>(i + n)});
  gens.push_back(Permutation::from_cycles(degree, swap));
  return named(group_from_permutations(gens, degree, 1000000),
               std::string(alternating ? "A" : "S") + std::to_string(n) + "wrC2");
}

GroupPtr named_group(const std::string& name, std::size_t cap) {
  if (name == "Q8") return quaternion_group();
  if (name == "V4") return klein_four_group();
  if (name == "SL23") return special_linear_group_2(3);
  if (name == "SL25") return special_linear_group_2(5);
  if (name == "ES32") return extraspecial_32();
  if (name == "A5wrC2") return wreath_with_c2(5, true);
  if (name.size() >= 2) {
    const std::string digits = name.substr(1);
    switch (name[0]) {
      case 'C': return cyclic_group(parse_size(digits, name));
      case 'S': return symmetric_group(parse_size(digits, name), cap);
      case 'A': return alternating_group(parse_size(digits, name), cap);
      case 'D': return dihedral_group(parse_size(digits, name));
      default: break;
    }
  }
  raise(ErrorKind::UnknownName, "unknown group name '" + name + "'");
}

}  // namespace chief
