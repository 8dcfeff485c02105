#include "ssb/generate.hpp"

#include <algorithm>
#include <cstdio>
#include <random>
#include <set>
#include <vector>

#include "ssb/error.hpp"

namespace ssb {

const char* const kGeneratedCategoryTModel = "7e57ca7e-0000-4000-8000-000000000001";
const char* const kGeneratedCategoryValue = "test-service";

namespace {

Key indexed_key(const char* block, int index) {
    char buf[40];
    std::snprintf(buf, sizeof(buf), "%s-0000-4000-8000-%012x", block, index);
    return Key::parse(buf);
}

}  // namespace

Stores generate_stores(const GenSpec& spec) {
    if (spec.n_actors <= 0) {
        throw Error(ErrorCode::ValidationError, "n_actors must be positive");
    }
    const std::int64_t max_edges =
        static_cast<std::int64_t>(spec.n_actors) * (spec.n_actors - 1) / 2;
    if (spec.n_edges < 0 || spec.n_edges > max_edges) {
        throw Error(ErrorCode::ValidationError,
                    "n_edges must be between 0 and n(n-1)/2 = " + std::to_string(max_edges));
    }
    if (spec.n_providers <= 0 || spec.n_providers > spec.n_actors) {
        throw Error(ErrorCode::ValidationError,
                    "n_providers must be between 1 and n_actors");
    }

    std::mt19937_64 rng(spec.seed);
    Stores stores;

    stores.registry.register_tmodel(
        TModel{Key::parse(kGeneratedCategoryTModel), "test-category-taxonomy",
               "taxonomy used by generated fixtures", std::nullopt});

    for (int i = 0; i < spec.n_actors; ++i) {
        Key key = indexed_key("0b5e55ed", i);
        char name[32];
        std::snprintf(name, sizeof(name), "Organization %04d", i);
        stores.registry.register_business(BusinessEntity{key, name, "", {}, {}, {}});
        stores.graph.add_actor(key);
    }

    // distinct unordered pairs, rejection-sampled
    std::set<std::pair<int, int>> seen;
    std::uniform_int_distribution<int> pick(0, spec.n_actors - 1);
    while (static_cast<std::int64_t>(seen.size()) < spec.n_edges) {
        int a = pick(rng);
        int b = pick(rng);
        if (a == b) continue;
        if (a > b) std::swap(a, b);
        if (!seen.insert({a, b}).second) continue;
        stores.graph.add_collaboration(
            CollaborationEdge{indexed_key("0b5e55ed", a), indexed_key("0b5e55ed", b), 1.0});
    }

    std::vector<int> indices(spec.n_actors);
    for (int i = 0; i < spec.n_actors; ++i) indices[i] = i;
    std::shuffle(indices.begin(), indices.end(), rng);
    indices.resize(spec.n_providers);
    std::sort(indices.begin(), indices.end());

    const KeyedReference category{Key::parse(kGeneratedCategoryTModel), "test category",
                                  kGeneratedCategoryValue};
    for (int i : indices) {
        char name[32];
        std::snprintf(name, sizeof(name), "Test service %04d", i);
        stores.registry.publish_service(BusinessService{
            indexed_key("5e1f1ced", i), indexed_key("0b5e55ed", i), name, "", {category}});
    }
    return stores;
}

}  // namespace ssb
