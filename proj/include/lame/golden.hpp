#pragma once

// Reference tables compiled in from data/golden.

#include <map>
#include <sstream>
#include <string>
#include <utility>
#include <vector>

#include "lame/algebra.hpp"
#include "lame/golden_data.hpp"

namespace lame::golden {

struct PolyEntry {
    std::string family;  ///< F_I, F_II, H_0, H_1
    int index = 0;       ///< m
    std::string text;    ///< as transcribed
    MPoly poly;
};

inline const std::vector<PolyEntry>& spectral_tables() {
    static const std::vector<PolyEntry> entries = [] {
        std::vector<PolyEntry> out;
        std::istringstream in(golden_data::kSpectralTables);
        std::string line;
        while (std::getline(in, line)) {
            if (line.empty() || line[0] == '#') continue;
            std::istringstream ls(line);
            PolyEntry e;
            ls >> e.family >> e.index;
            std::getline(ls >> std::ws, e.text);
            e.poly = parse_mpoly(e.text);
            out.push_back(std::move(e));
        }
        return out;
    }();
    return entries;
}

inline const PolyEntry* find_poly(const std::string& family, int index) {
    for (const auto& e : spectral_tables()) {
        if (e.family == family && e.index == index) return &e;
    }
    return nullptr;
}

/// One row of the topology tables; fields absent for a component are -1.
struct TopologyRow {
    std::string component;
    int m = 0, e0 = -1, e1 = 0, e2 = 0, V1 = 0, V2 = 0, V3 = 0, E = 0, V = 0, chi = 0, h = 0, g = 0, d = 0;
};

inline const std::vector<TopologyRow>& topology_tables() {
    static const std::vector<TopologyRow> rows = [] {
        std::vector<TopologyRow> out;
        std::istringstream in(golden_data::kTopologyTables);
        std::string line;
        while (std::getline(in, line)) {
            if (line.empty() || line[0] == '#') continue;
            std::istringstream ls(line);
            TopologyRow r;
            ls >> r.component >> r.m;
            if (r.component == "I") {
                ls >> r.e0 >> r.e1 >> r.e2 >> r.V1 >> r.V2 >> r.V3 >> r.E >> r.V >> r.chi >> r.h >> r.g >> r.d;
            } else {
                int d3 = 0;
                ls >> r.e1 >> r.e2 >> r.V1 >> r.V2 >> r.V3 >> r.E >> r.V >> r.chi >> r.h >> r.g >> d3;
                r.d = 3 * d3;
            }
            out.push_back(r);
        }
        return out;
    }();
    return rows;
}

}  // namespace lame::golden
