#pragma once

#include <cstddef>
#include <memory>
#include <optional>
#include <string>
#include <string_view>
#include <unordered_map>
#include <vector>

namespace redux {

/// Structured variable name: a family tag plus integer indices.
/// Serialized as "family.i.j", e.g. "beta.3.1.2", "x.1", "alpha.0".
struct VarName {
  std::string family;
  std::vector<int> indices;

  static VarName parse(std::string_view text);
  std::string str() const;

  friend bool operator==(const VarName&, const VarName&) = default;
};

VarName var(std::string family, std::initializer_list<int> indices = {});

/// Ordered, duplicate-free list of variable names with a name -> position index.
class VariableLayout {
 public:
  VariableLayout() = default;
  explicit VariableLayout(std::vector<std::string> names);
  explicit VariableLayout(const std::vector<VarName>& names);

  std::size_t size() const { return names_.size(); }
  const std::vector<std::string>& names() const { return names_; }
  const std::string& name(std::size_t i) const { return names_.at(i); }
  VarName structured(std::size_t i) const { return VarName::parse(names_.at(i)); }

  std::optional<std::size_t> find(std::string_view name) const;
  /// Throws InputError when the name is absent.
  std::size_t index(std::string_view name) const;
  bool contains(std::string_view name) const { return find(name).has_value(); }

  friend bool operator==(const VariableLayout& a, const VariableLayout& b) {
    return a.names_ == b.names_;
  }

 private:
  std::vector<std::string> names_;
  std::unordered_map<std::string, std::size_t> index_;
};

using LayoutPtr = std::shared_ptr<const VariableLayout>;

LayoutPtr make_layout(std::vector<std::string> names);
LayoutPtr make_layout(const std::vector<VarName>& names);

bool same_layout(const LayoutPtr& a, const LayoutPtr& b);

}  // namespace redux
