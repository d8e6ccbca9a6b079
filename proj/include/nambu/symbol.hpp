#ifndef NAMBU_SYMBOL_HPP
#define NAMBU_SYMBOL_HPP

#include <memory>
#include <optional>
#include <string>
#include <unordered_map>
#include <vector>

namespace nambu {

enum class SymbolKind { variable, parameter };

// A symbol handle scoped to one VariableSpace. Variables carry a component
// index (1..3) and a degree-of-freedom index (1..n); parameters carry only
// a name. Comparison and hashing go through the dense space index.
struct Symbol {
    SymbolKind kind = SymbolKind::parameter;
    int index = -1;  // dense index within the owning space
    int comp = 0;    // 1..3 for variables
    int dof = 0;     // 1..n for variables
    std::string name;

    bool is_variable() const { return kind == SymbolKind::variable; }
    bool operator==(const Symbol& o) const { return index == o.index && name == o.name; }
    bool operator<(const Symbol& o) const { return index < o.index; }
};

class VariableSpace;
using SpacePtr = std::shared_ptr<const VariableSpace>;

// The indexed set of 3n phase-space variables plus declared parameters.
// Variables come first, ordered (x1_1, x2_1, x3_1, x1_2, ...); parameters
// follow in declaration order. Immutable after creation.
class VariableSpace {
  public:
    static SpacePtr create(int dof_count, std::vector<std::string> parameter_names = {});

    int dof_count() const { return n_; }
    int variable_count() const { return 3 * n_; }
    int parameter_count() const { return static_cast<int>(names_.size()) - 3 * n_; }
    int symbol_count() const { return static_cast<int>(names_.size()); }

    // comp in 1..3, dof in 1..n; throws std::out_of_range otherwise.
    Symbol variable(int comp, int dof) const;
    Symbol parameter(const std::string& name) const;  // throws if undeclared
    Symbol symbol(int index) const;
    std::optional<Symbol> find(const std::string& name) const;

    const std::string& name_of(int index) const { return names_.at(index); }
    const std::vector<std::string>& names() const { return names_; }

    bool index_is_variable(int index) const { return index < 3 * n_; }
    // 1-based DOF of a variable index.
    int dof_of_index(int index) const { return index / 3 + 1; }
    int comp_of_index(int index) const { return index % 3 + 1; }
    static int variable_index(int comp, int dof) { return 3 * (dof - 1) + (comp - 1); }

    std::vector<std::string> parameter_names() const;

    bool operator==(const VariableSpace& o) const { return n_ == o.n_ && names_ == o.names_; }
    bool operator!=(const VariableSpace& o) const { return !(*this == o); }

  private:
    VariableSpace(int n, std::vector<std::string> names);

    int n_;
    std::vector<std::string> names_;
    std::unordered_map<std::string, int> index_by_name_;
};

// True if a name has the reserved variable shape x<comp>_<dof>.
bool looks_like_variable_name(const std::string& name);

}  // namespace nambu

#endif
