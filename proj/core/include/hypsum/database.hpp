#pragma once

#include <optional>

#include "hypsum/hyperterm.hpp"

namespace hypsum {

struct TheoremEntry {
    TheoremSpec spec;
    std::optional<std::pair<std::string, int>> shift; // pipeline override
    std::string extension_param;                      // empty: no extension
    int extension_times = 0;
    bool numeric_only = false; // symbolic pipeline disabled for this entry
    std::string numeric_only_reason;
};

// Built-in theorems, stable order: kummer, bailey, dixon, gauss,
// dixon-4f3, dixon-5f4.
const std::vector<TheoremEntry>& theorem_database();

const TheoremEntry* find_theorem(const std::string& name);

} // namespace hypsum
