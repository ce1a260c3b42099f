#pragma once

#include <json.hpp>

#include <sstream>
#include <string>
#include <vector>

#include "curvex/errors.hpp"
#include "curvex/graph.hpp"
#include "curvex/graph6.hpp"
#include "curvex/index_value.hpp"

namespace curvex {

// One replayable construction step. "start" carries the initial graph; the
// composition steps carry the operand graph and the vertices involved
// (u in the evolving graph, v in the operand; pendants only use u). Each
// step records the curvature index of the evolving graph after the step.
struct TraceStep {
    std::string op;   // start | join | coalesce | product | pendant
    std::string arg;  // graph6 of the operand (empty for pendant)
    int u = -1;
    int v = -1;
    IndexValue index;

    nlohmann::json to_json() const {
        nlohmann::json j{{"op", op}, {"index", index.str()}};
        if (!arg.empty()) j["arg"] = arg;
        if (u >= 0) j["u"] = u;
        if (v >= 0) j["v"] = v;
        return j;
    }

    static TraceStep from_json(const nlohmann::json& j) {
        TraceStep s;
        s.op = j.at("op").get<std::string>();
        s.arg = j.value("arg", std::string{});
        s.u = j.value("u", -1);
        s.v = j.value("v", -1);
        s.index = IndexValue::parse(j.at("index").get<std::string>());
        return s;
    }
};

struct ConstructionTrace {
    std::vector<TraceStep> steps;

    std::string to_jsonl() const {
        std::string out;
        for (const TraceStep& s : steps) out += s.to_json().dump() + "\n";
        return out;
    }

    static ConstructionTrace from_jsonl(const std::string& text) {
        ConstructionTrace t;
        std::istringstream in(text);
        std::string line;
        while (std::getline(in, line)) {
            if (line.empty()) continue;
            t.steps.push_back(TraceStep::from_json(nlohmann::json::parse(line)));
        }
        return t;
    }
};

// Rebuilds the final graph from a trace, vertex-for-vertex.
inline Graph replay_trace(const ConstructionTrace& trace) {
    if (trace.steps.empty() || trace.steps.front().op != "start")
        throw InvalidParameter("trace must begin with a start step");
    Graph g = parse_graph6(trace.steps.front().arg);
    for (std::size_t i = 1; i < trace.steps.size(); ++i) {
        const TraceStep& s = trace.steps[i];
        if (s.op == "join") {
            g = join(g, parse_graph6(s.arg));
        } else if (s.op == "coalesce") {
            g = coalesce(g, s.u, parse_graph6(s.arg), s.v);
        } else if (s.op == "product") {
            g = cartesian_product(g, parse_graph6(s.arg));
        } else if (s.op == "pendant") {
            g = add_pendant(g, s.u);
        } else {
            throw InvalidParameter("unknown trace op '" + s.op + "'");
        }
    }
    return g;
}

}  // namespace curvex
