#include <cctype>
#include <stdexcept>
#include <string>
#include <vector>

#include "polyspace/gale.hpp"
#include "polyspace/rational.hpp"

namespace polyspace {

namespace {

std::string strip_spaces(std::string_view text) {
  std::string out;
  for (char c : text) {
    if (!std::isspace(static_cast<unsigned char>(c))) out.push_back(c);
  }
  return out;
}

bool all_digits(std::string_view s) {
  if (s.empty()) return false;
  for (char c : s) {
    if (!std::isdigit(static_cast<unsigned char>(c))) return false;
  }
  return true;
}

int to_int(std::string_view s, std::string_view whole) {
  if (!all_digits(s) || s.size() > 4) {
    throw ParseError("bad number '" + std::string(s) + "' in code '" + std::string(whole) + "'");
  }
  return std::stoi(std::string(s));
}

// A token can be read as concatenated digits: strictly descending, no zero.
bool is_digit_string(std::string_view tok) {
  if (!all_digits(tok)) return false;
  for (std::size_t i = 0; i < tok.size(); ++i) {
    if (tok[i] == '0') return false;
    if (i > 0 && tok[i] >= tok[i - 1]) return false;
  }
  return true;
}

std::vector<std::string> split(const std::string& s, char sep) {
  std::vector<std::string> out;
  std::size_t start = 0;
  while (true) {
    const auto pos = s.find(sep, start);
    out.push_back(s.substr(start, pos - start));
    if (pos == std::string::npos) break;
    start = pos + 1;
  }
  return out;
}

IndexSet make_set(const std::vector<int>& members, std::string_view whole) {
  IndexSet s;
  for (int m : members) {
    if (m < 1 || m > IndexSet::kMaxMember) {
      throw ParseError("member " + std::to_string(m) + " out of range in '" + std::string(whole) + "'");
    }
    if (s.contains(m)) {
      throw ParseError("repeated member " + std::to_string(m) + " in '" + std::string(whole) + "'");
    }
    s = s.with(m);
  }
  return s;
}

}  // namespace

std::string format_gee(const IndexSet& gee) {
  if (gee.empty()) return "0";
  const auto members = gee.descending();
  std::string out;
  if (gee.max() <= 9) {
    for (int m : members) out += static_cast<char>('0' + m);
    return out;
  }
  for (std::size_t i = 0; i < members.size(); ++i) {
    if (i > 0) out += ',';
    out += std::to_string(members[i]);
  }
  // A lone member such as 21 would otherwise read back as {2,1}.
  if (members.size() == 1) out += ',';
  return out;
}

std::string format_code(const GeneticCode& code) {
  std::string out = std::to_string(code.n) + ":[";
  for (std::size_t i = 0; i < code.gees.size(); ++i) {
    if (i > 0) out += '|';
    const auto& g = code.gees[i];
    out += format_gee(g);
  }
  out += ']';
  return out;
}

GeneticCode parse_code(std::string_view text) {
  const std::string s = strip_spaces(text);
  const auto colon = s.find(':');
  if (colon == std::string::npos || s.size() < colon + 3 || s[colon + 1] != '[' || s.back() != ']') {
    throw ParseError("code must look like n:[g|g|...], got '" + std::string(text) + "'");
  }
  const int n = to_int(s.substr(0, colon), text);
  const std::string body = s.substr(colon + 2, s.size() - colon - 3);
  std::vector<IndexSet> gees;
  if (!body.empty()) {
    for (const auto& tok : split(body, '|')) {
      if (tok.empty()) throw ParseError("empty gee in '" + std::string(text) + "'");
      std::vector<int> members;
      if (tok.find(',') != std::string::npos) {
        auto parts = split(tok, ',');
        if (parts.back().empty()) parts.pop_back();
        for (const auto& p : parts) members.push_back(to_int(p, text));
      } else if (tok == "0") {
      } else if (is_digit_string(tok)) {
        for (char c : tok) members.push_back(c - '0');
      } else {
        members.push_back(to_int(tok, text));
      }
      gees.push_back(make_set(members, text));
    }
  }
  try {
    return canonicalize(std::move(gees), n);
  } catch (const std::invalid_argument& e) {
    throw ParseError(std::string(e.what()) + " in '" + std::string(text) + "'");
  }
}

}  // namespace polyspace
