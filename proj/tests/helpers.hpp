#pragma once

#include <cstdio>
#include <fstream>
#include <random>
#include <sstream>
#include <string>

#include "ssb/generate.hpp"
#include "ssb/registry.hpp"
#include "ssb/snapshot.hpp"
#include "ssb/social_graph.hpp"

namespace ssb::testing {

/// Deterministic key for small-index test entities.
inline Key key_of(int i, char block = '0') {
    char buf[40];
    std::snprintf(buf, sizeof(buf), "%c0000000-0000-4000-8000-%012x", block, i);
    return Key::parse(buf);
}

// Keys of the worked-example fixture (organizations A..J).
inline Key fig3_org(char letter) {
    char buf[40];
    std::snprintf(buf, sizeof(buf), "00000000-0000-4000-8000-0000000000%02d",
                  letter - 'A' + 1);
    return Key::parse(buf);
}

inline const Key kReportsTModel = Key::parse("7e000000-0000-4000-8000-000000000001");
inline const KeyedReference kPerformanceReport{kReportsTModel, "report type",
                                               "performance-report"};

inline std::string read_file(const std::string& path) {
    std::ifstream in(path, std::ios::binary);
    std::ostringstream buf;
    buf << in.rdbuf();
    return buf.str();
}

inline Stores load_fig3() { return load_snapshot(std::string(FIXTURE_DIR) + "/figure3.jsonl"); }

/// Random undirected graph on keys key_of(0..n-1); edge set drawn by a
/// seeded generator.
inline SocialGraph random_graph(int n, double edge_probability, std::mt19937_64& rng) {
    SocialGraph g;
    for (int i = 0; i < n; ++i) g.add_actor(key_of(i));
    std::bernoulli_distribution flip(edge_probability);
    for (int i = 0; i < n; ++i) {
        for (int j = i + 1; j < n; ++j) {
            if (flip(rng)) g.add_collaboration({key_of(i), key_of(j), 1.0});
        }
    }
    return g;
}

}  // namespace ssb::testing
