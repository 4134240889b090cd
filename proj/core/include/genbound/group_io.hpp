#pragma once

#include <string>

#include "genbound/perm_group.hpp"

namespace genbound::perm {

// Group files: first non-comment line is `degree k`, then one permutation
// per line in 1-based cycle notation. Lines starting with '#' and blank
// lines are skipped. A group with no generator lines is the trivial group.
struct GroupFile {
    uint32_t degree = 0;
    std::vector<Permutation> generators;
};

GroupFile read_group_file(const std::string& path);

PermGroup load_group(const std::string& path, ClosureBudget budget = {});

} // namespace genbound::perm
