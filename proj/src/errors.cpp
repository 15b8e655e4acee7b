#include "cc/errors.hpp"

#include <cstdlib>

namespace cc {

namespace {

int env_int(const char* name, int dflt) {
    const char* v = std::getenv(name);
    if (!v || !*v) return dflt;
    return std::atoi(v);
}

} // namespace

int limits::max_n() { return env_int("CC_MAX_N", 128); }
int limits::max_rank_algebraic() { return env_int("CC_MAX_RANK_ALGEBRAIC", 80); }
int limits::max_rank_parabolics() { return env_int("CC_MAX_RANK_PARABOLICS", 40); }
long long limits::max_search_nodes() { return env_int("CC_MAX_SEARCH_NODES_M", 100) * 1000000LL; }
long long limits::max_group_order() { return env_int("CC_MAX_GROUP_ORDER", 2000000); }

} // namespace cc
