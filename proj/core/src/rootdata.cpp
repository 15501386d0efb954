#include "ckf/rootdata.hpp"

#include <algorithm>
#include <cctype>
#include <charconv>
#include <numeric>
#include <stdexcept>

namespace ckf {

namespace {

bool admissible(Family f, int r) {
  switch (f) {
    case Family::A: return r >= 1;
    case Family::B: return r >= 2;
    case Family::C: return r >= 2;
    case Family::D: return r >= 3;
    case Family::E: return r >= 6 && r <= 8;
    case Family::F: return r == 4;
    case Family::G: return r == 2;
  }
  return false;
}

std::string_view trim(std::string_view s) {
  while (!s.empty() && std::isspace(static_cast<unsigned char>(s.front())))
    s.remove_prefix(1);
  while (!s.empty() && std::isspace(static_cast<unsigned char>(s.back())))
    s.remove_suffix(1);
  return s;
}

int parse_rank(std::string_view digits, std::string_view whole) {
  int value = 0;
  auto [ptr, ec] = std::from_chars(digits.data(), digits.data() + digits.size(), value);
  if (digits.empty() || ec != std::errc() || ptr != digits.data() + digits.size())
    throw std::invalid_argument("bad rank in type label '" + std::string(whole) + "'");
  return value;
}

} // namespace

CartanType::CartanType(Family family, int rank) : family_(family), rank_(rank) {
  if (!admissible(family, rank))
    throw std::invalid_argument("inadmissible Cartan type " + std::string(1, char(family)) +
                                std::to_string(rank));
}

CartanType CartanType::parse(std::string_view text) {
  text = trim(text);
  if (text.size() < 2)
    throw std::invalid_argument("bad Cartan type label '" + std::string(text) + "'");
  char letter = static_cast<char>(std::toupper(static_cast<unsigned char>(text.front())));
  if (letter < 'A' || letter > 'G')
    throw std::invalid_argument("unknown Cartan family in '" + std::string(text) + "'");
  return CartanType(static_cast<Family>(letter), parse_rank(text.substr(1), text));
}

std::string CartanType::label() const {
  return std::string(1, static_cast<char>(family_)) + std::to_string(rank_);
}

bool CartanType::is_alias() const {
  return (family_ == Family::C && rank_ == 2) || (family_ == Family::D && rank_ == 3);
}

std::vector<int> invariant_degrees(const CartanType& t) {
  const int n = t.rank();
  std::vector<int> d;
  switch (t.family()) {
    case Family::A:
      for (int i = 2; i <= n + 1; ++i) d.push_back(i);
      break;
    case Family::B:
    case Family::C:
      for (int i = 1; i <= n; ++i) d.push_back(2 * i);
      break;
    case Family::D:
      for (int i = 1; i <= n - 1; ++i) d.push_back(2 * i);
      d.push_back(n);
      std::sort(d.begin(), d.end());
      break;
    case Family::E:
      if (n == 6) d = {2, 5, 6, 8, 9, 12};
      else if (n == 7) d = {2, 6, 8, 10, 12, 14, 18};
      else d = {2, 8, 12, 14, 18, 20, 24, 30};
      break;
    case Family::F:
      d = {2, 6, 8, 12};
      break;
    case Family::G:
      d = {2, 6};
      break;
  }
  return d;
}

int number_of_roots(const CartanType& t) {
  int roots = 0;
  for (int d : invariant_degrees(t)) roots += 2 * d - 2;
  return roots;
}

int dimension(const CartanType& t) { return t.rank() + number_of_roots(t); }

Integer weyl_order(const CartanType& t) {
  Integer order = 1;
  for (int d : invariant_degrees(t)) order *= d;
  return order;
}

ReductiveType::ReductiveType(std::vector<CartanType> factors, int torus_rank)
    : factors_(std::move(factors)), torus_rank_(torus_rank) {
  if (torus_rank_ < 0) throw std::invalid_argument("negative torus rank");
  // Aliases are stored under their primary name so that equality is
  // isomorphism: C2 -> B2, D3 -> A3.
  for (auto& f : factors_) {
    if (f.family() == Family::C && f.rank() == 2) f = CartanType(Family::B, 2);
    else if (f.family() == Family::D && f.rank() == 3) f = CartanType(Family::A, 3);
  }
  std::sort(factors_.begin(), factors_.end(), [](const CartanType& a, const CartanType& b) {
    if (a.family() != b.family()) return a.family() < b.family();
    return a.rank() > b.rank();
  });
}

ReductiveType ReductiveType::parse(std::string_view text) {
  text = trim(text);
  if (text.empty() || text == "0") return {};
  std::vector<CartanType> factors;
  int torus = 0;
  while (!text.empty()) {
    auto plus = text.find('+');
    std::string_view part = trim(text.substr(0, plus));
    if (part.empty())
      throw std::invalid_argument("empty summand in type label");
    if (part.front() == 'T' || part.front() == 't')
      torus += parse_rank(part.substr(1), part);
    else
      factors.push_back(CartanType::parse(part));
    if (plus == std::string_view::npos) break;
    text.remove_prefix(plus + 1);
    if (trim(text).empty())
      throw std::invalid_argument("trailing '+' in type label");
  }
  return ReductiveType(std::move(factors), torus);
}

int ReductiveType::rank() const {
  int r = torus_rank_;
  for (const auto& f : factors_) r += f.rank();
  return r;
}

int ReductiveType::dimension() const {
  int d = torus_rank_;
  for (const auto& f : factors_) d += ckf::dimension(f);
  return d;
}

Integer ReductiveType::weyl_order() const {
  Integer order = 1;
  for (const auto& f : factors_) order *= ckf::weyl_order(f);
  return order;
}

std::vector<int> ReductiveType::invariant_degrees() const {
  std::vector<int> all;
  for (const auto& f : factors_) {
    auto d = ckf::invariant_degrees(f);
    all.insert(all.end(), d.begin(), d.end());
  }
  all.insert(all.end(), static_cast<std::size_t>(torus_rank_), 1);
  return all;
}

std::string ReductiveType::label() const {
  if (is_trivial()) return "0";
  std::string out;
  for (const auto& f : factors_) {
    if (!out.empty()) out += '+';
    out += f.label();
  }
  if (torus_rank_ > 0) {
    if (!out.empty()) out += '+';
    out += "T" + std::to_string(torus_rank_);
  }
  return out;
}

} // namespace ckf
