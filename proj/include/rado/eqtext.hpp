#pragma once

// Text forms for concrete equations accepted on the command line:
//   "a*x + b*y = c*z"  with integer coefficients (names x, y, z or x1..xm),
//   "E(3,0;4,3,3)"     the compact triple form with concrete integers.

#include <cctype>
#include <string>

#include "rado/diophantine.hpp"

namespace rado {

inline LinearEquation parseEquationText(const std::string& text) {
  auto fail = [&](const std::string& why) -> LinearEquation {
    throw ParseError("equation '" + text + "': " + why);
  };
  size_t i = 0;
  auto skipWs = [&]() {
    while (i < text.size() && std::isspace(static_cast<unsigned char>(text[i]))) ++i;
  };
  skipWs();
  if (text[i] == 'E' || text[i] == 'e') {
    // E(m,c;a1,...,am)
    ++i;
    skipWs();
    if (i >= text.size() || text[i] != '(') return fail("expected '('");
    ++i;
    std::vector<Int> nums;
    std::string cur;
    for (; i < text.size(); ++i) {
      char c = text[i];
      if (c == ',' || c == ';' || c == ')') {
        if (cur.empty()) return fail("empty number");
        nums.push_back(std::stoll(cur));
        cur.clear();
        if (c == ')') break;
      } else if (!std::isspace(static_cast<unsigned char>(c))) {
        cur += c;
      }
    }
    if (nums.size() < 5) return fail("E form needs m, c and at least three coefficients");
    Int m = nums[0], c = nums[1];
    if (static_cast<Int>(nums.size()) != m + 2) return fail("coefficient count does not match m");
    std::vector<Int> lhs(nums.begin() + 2, nums.end() - 1);
    return LinearEquation(lhs, nums.back(), c);
  }

  // Sum form: terms "c*name" or bare integers on the left, single term right.
  size_t eqPos = text.find('=');
  if (eqPos == std::string::npos) return fail("missing '='");
  auto parseSide = [&](const std::string& side, std::vector<std::pair<Int, std::string>>& terms,
                       Int& constant) {
    size_t p = 0;
    Int sign = 1;
    while (p < side.size()) {
      while (p < side.size() && std::isspace(static_cast<unsigned char>(side[p]))) ++p;
      if (p >= side.size()) break;
      if (side[p] == '+') {
        sign = 1;
        ++p;
        continue;
      }
      if (side[p] == '-') {
        sign = -1;
        ++p;
        continue;
      }
      Int coeff = 1;
      bool sawNum = false;
      if (std::isdigit(static_cast<unsigned char>(side[p]))) {
        size_t q = p;
        while (q < side.size() && std::isdigit(static_cast<unsigned char>(side[q]))) ++q;
        coeff = std::stoll(side.substr(p, q - p));
        sawNum = true;
        p = q;
      }
      while (p < side.size() && (std::isspace(static_cast<unsigned char>(side[p])) || side[p] == '*')) ++p;
      if (p < side.size() && (std::isalpha(static_cast<unsigned char>(side[p])) || side[p] == '_')) {
        size_t q = p;
        while (q < side.size() &&
               (std::isalnum(static_cast<unsigned char>(side[q])) || side[q] == '_'))
          ++q;
        terms.push_back({sign * coeff, side.substr(p, q - p)});
        p = q;
      } else if (sawNum) {
        constant += sign * coeff;
      } else {
        throw ParseError("equation '" + text + "': unexpected character '" + side[p] + "'");
      }
      sign = 1;
    }
  };
  std::vector<std::pair<Int, std::string>> lhsTerms, rhsTerms;
  Int lhsConst = 0, rhsConst = 0;
  parseSide(text.substr(0, eqPos), lhsTerms, lhsConst);
  parseSide(text.substr(eqPos + 1), rhsTerms, rhsConst);
  if (rhsTerms.size() != 1 || rhsConst != 0) return fail("right side must be a single term");
  if (lhsTerms.size() < 2) return fail("left side needs at least two variable terms");
  std::vector<Int> lhs;
  for (auto& [c, n] : lhsTerms) lhs.push_back(c);
  return LinearEquation(lhs, rhsTerms[0].first, lhsConst);
}

}  // namespace rado
