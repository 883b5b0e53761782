#include "redux/layout.hpp"

#include <charconv>

#include "redux/errors.hpp"

namespace redux {

VarName VarName::parse(std::string_view text) {
  VarName out;
  std::vector<std::string_view> parts;
  std::size_t start = 0;
  while (true) {
    auto dot = text.find('.', start);
    parts.push_back(text.substr(start, dot == std::string_view::npos ? dot : dot - start));
    if (dot == std::string_view::npos) break;
    start = dot + 1;
  }
  out.family = std::string(parts.front());
  for (std::size_t i = 1; i < parts.size(); ++i) {
    int value = 0;
    auto [ptr, ec] = std::from_chars(parts[i].data(), parts[i].data() + parts[i].size(), value);
    if (ec != std::errc{} || ptr != parts[i].data() + parts[i].size()) {
      // Not a structured name; keep the whole text as the family tag.
      return VarName{std::string(text), {}};
    }
    out.indices.push_back(value);
  }
  return out;
}

std::string VarName::str() const {
  std::string s = family;
  for (int i : indices) {
    s += '.';
    s += std::to_string(i);
  }
  return s;
}

VarName var(std::string family, std::initializer_list<int> indices) {
  return VarName{std::move(family), std::vector<int>(indices)};
}

VariableLayout::VariableLayout(std::vector<std::string> names) : names_(std::move(names)) {
  index_.reserve(names_.size());
  for (std::size_t i = 0; i < names_.size(); ++i) {
    if (names_[i].empty()) throw InputError("empty variable name");
    if (!index_.emplace(names_[i], i).second) {
      throw InputError("duplicate variable name '" + names_[i] + "'");
    }
  }
}

VariableLayout::VariableLayout(const std::vector<VarName>& names) {
  std::vector<std::string> flat;
  flat.reserve(names.size());
  for (const auto& n : names) flat.push_back(n.str());
  *this = VariableLayout(std::move(flat));
}

std::optional<std::size_t> VariableLayout::find(std::string_view name) const {
  auto it = index_.find(std::string(name));
  if (it == index_.end()) return std::nullopt;
  return it->second;
}

std::size_t VariableLayout::index(std::string_view name) const {
  auto i = find(name);
  if (!i) throw InputError("unknown variable '" + std::string(name) + "'");
  return *i;
}

LayoutPtr make_layout(std::vector<std::string> names) {
  return std::make_shared<const VariableLayout>(std::move(names));
}

LayoutPtr make_layout(const std::vector<VarName>& names) {
  return std::make_shared<const VariableLayout>(names);
}

bool same_layout(const LayoutPtr& a, const LayoutPtr& b) {
  return a == b || (a && b && *a == *b);
}

}  // namespace redux
