#include "genbound/group_io.hpp"

#include <fstream>
#include <sstream>

namespace genbound::perm {

GroupFile read_group_file(const std::string& path) {
    std::ifstream in(path);
    if (!in) throw parse_error("cannot open group file: " + path);
    GroupFile gf;
    std::string line;
    bool have_degree = false;
    size_t lineno = 0;
    while (std::getline(in, line)) {
        ++lineno;
        size_t first = line.find_first_not_of(" \t\r");
        if (first == std::string::npos || line[first] == '#') continue;
        std::string body = line.substr(first);
        if (!body.empty() && body.back() == '\r') body.pop_back();
        if (!have_degree) {
            std::istringstream ss(body);
            std::string kw;
            uint64_t deg = 0;
            if (!(ss >> kw >> deg) || kw != "degree" || deg < 1 || deg > 60'000)
                throw parse_error(path + ":" + std::to_string(lineno) +
                                  ": expected `degree k` header, got \"" + body + "\"");
            std::string extra;
            if (ss >> extra)
                throw parse_error(path + ":" + std::to_string(lineno) + ": trailing tokens after degree");
            gf.degree = static_cast<uint32_t>(deg);
            have_degree = true;
            continue;
        }
        try {
            gf.generators.push_back(parse_permutation(body, gf.degree));
        } catch (const parse_error& e) {
            throw parse_error(path + ":" + std::to_string(lineno) + ": " + e.what());
        }
    }
    if (!have_degree) throw parse_error(path + ": missing `degree k` header");
    return gf;
}

PermGroup load_group(const std::string& path, ClosureBudget budget) {
    GroupFile gf = read_group_file(path);
    return PermGroup::closure(gf.degree, std::move(gf.generators), budget);
}

} // namespace genbound::perm
