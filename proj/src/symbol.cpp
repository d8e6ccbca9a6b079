#include "nambu/symbol.hpp"

#include <cctype>
#include <stdexcept>

namespace nambu {

namespace {

bool valid_identifier(const std::string& name) {
    if (name.empty()) return false;
    if (!(std::isalpha(static_cast<unsigned char>(name[0])) || name[0] == '_')) return false;
    for (char ch : name) {
        if (!(std::isalnum(static_cast<unsigned char>(ch)) || ch == '_')) return false;
    }
    return true;
}

std::string variable_name(int comp, int dof) {
    return "x" + std::to_string(comp) + "_" + std::to_string(dof);
}

}  // namespace

bool looks_like_variable_name(const std::string& name) {
    // x<digits>_<digits>
    if (name.size() < 4 || name[0] != 'x') return false;
    std::size_t us = name.find('_');
    if (us == std::string::npos || us < 2 || us + 1 >= name.size()) return false;
    for (std::size_t p = 1; p < name.size(); ++p) {
        if (p == us) continue;
        if (!std::isdigit(static_cast<unsigned char>(name[p]))) return false;
    }
    return true;
}

VariableSpace::VariableSpace(int n, std::vector<std::string> names)
    : n_(n), names_(std::move(names)) {
    index_by_name_.reserve(names_.size());
    for (int i = 0; i < static_cast<int>(names_.size()); ++i) {
        index_by_name_.emplace(names_[i], i);
    }
}

SpacePtr VariableSpace::create(int dof_count, std::vector<std::string> parameter_names) {
    if (dof_count < 1) throw std::invalid_argument("degree-of-freedom count must be positive");
    std::vector<std::string> names;
    names.reserve(3 * dof_count + parameter_names.size());
    for (int dof = 1; dof <= dof_count; ++dof) {
        for (int comp = 1; comp <= 3; ++comp) {
            names.push_back(variable_name(comp, dof));
        }
    }
    for (const auto& p : parameter_names) {
        if (!valid_identifier(p)) {
            throw std::invalid_argument("invalid parameter name '" + p + "'");
        }
        if (looks_like_variable_name(p)) {
            throw std::invalid_argument("parameter name '" + p + "' collides with variable naming");
        }
        for (const auto& existing : names) {
            if (existing == p) throw std::invalid_argument("duplicate symbol name '" + p + "'");
        }
        names.push_back(p);
    }
    return SpacePtr(new VariableSpace(dof_count, std::move(names)));
}

Symbol VariableSpace::symbol(int index) const {
    if (index < 0 || index >= symbol_count()) throw std::out_of_range("symbol index out of range");
    Symbol s;
    s.index = index;
    s.name = names_[index];
    if (index_is_variable(index)) {
        s.kind = SymbolKind::variable;
        s.dof = dof_of_index(index);
        s.comp = comp_of_index(index);
    } else {
        s.kind = SymbolKind::parameter;
    }
    return s;
}

Symbol VariableSpace::variable(int comp, int dof) const {
    if (comp < 1 || comp > 3) throw std::out_of_range("variable component must be 1..3");
    if (dof < 1 || dof > n_) throw std::out_of_range("DOF index out of range");
    return symbol(variable_index(comp, dof));
}

Symbol VariableSpace::parameter(const std::string& name) const {
    auto it = index_by_name_.find(name);
    if (it == index_by_name_.end() || index_is_variable(it->second)) {
        throw std::invalid_argument("undeclared parameter '" + name + "'");
    }
    return symbol(it->second);
}

std::optional<Symbol> VariableSpace::find(const std::string& name) const {
    auto it = index_by_name_.find(name);
    if (it == index_by_name_.end()) return std::nullopt;
    return symbol(it->second);
}

std::vector<std::string> VariableSpace::parameter_names() const {
    return std::vector<std::string>(names_.begin() + 3 * n_, names_.end());
}

}  // namespace nambu
