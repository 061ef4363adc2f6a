#include "lklab/dimacs.hpp"

#include <algorithm>
#include <istream>
#include <ostream>
#include <sstream>

#include "lklab/errors.hpp"

namespace lklab {

void write_dimacs(std::ostream& os, const Graph& g)
{
    os << "c lklab family=" << g.family_name();
    switch (g.family()) {
    case Graph::Family::kneser:
        os << " m=" << g.ground_size() << " n=" << g.subset_size();
        break;
    case Graph::Family::local_complete:
        os << " n=" << g.ground_size() << " r=" << g.r();
        break;
    case Graph::Family::local_kneser:
        os << " n=" << g.ground_size() << " r=" << g.r() << " t=" << g.t();
        break;
    case Graph::Family::custom:
        break;
    }
    os << "\n";
    os << "p edge " << g.vertex_count() << " " << g.edge_count() << "\n";
    g.for_each_edge([&](int u, int v) { os << "e " << (u + 1) << " " << (v + 1) << "\n"; });
}

void write_label_sidecar(std::ostream& os, const Graph& g)
{
    for (int v = 0; v < g.vertex_count(); ++v) {
        const VertexLabel& l = g.label(v);
        os << (v + 1) << "\t" << to_braced_string(l.a) << "\t" << to_braced_string(l.b) << "\n";
    }
}

LabeledGraphFile read_dimacs(std::istream& is)
{
    LabeledGraphFile file;
    bool got_header = false;
    long long declared_edges = -1;
    int line_no = 0;
    std::string line;
    while (std::getline(is, line)) {
        ++line_no;
        if (line.empty())
            continue;
        std::istringstream ls(line);
        if (line[0] == 'c') {
            std::string tag, word;
            ls >> tag >> word;
            if (word == "lklab") {
                // parameters embedded as key=value tokens
                std::string kv;
                while (ls >> kv) {
                    size_t eq = kv.find('=');
                    if (eq == std::string::npos)
                        throw SchemaError("bad header token at line " + std::to_string(line_no));
                    std::string key = kv.substr(0, eq);
                    std::string value = kv.substr(eq + 1);
                    if (key == "family")
                        file.family = value;
                    else if (key == "m" || key == "n" || key == "r" || key == "t") {
                        int x = 0;
                        try {
                            x = std::stoi(value);
                        } catch (const std::exception&) {
                            throw SchemaError("non-numeric header value at line " + std::to_string(line_no));
                        }
                        if (key == "m")
                            file.m = x;
                        else if (key == "n")
                            file.n = x;
                        else if (key == "r")
                            file.r = x;
                        else
                            file.t = x;
                    }
                }
            }
            continue;
        }
        if (line[0] == 'p') {
            std::string p, edge;
            long long v = -1, e = -1;
            ls >> p >> edge >> v >> e;
            if (!ls || edge != "edge" || v < 0 || e < 0)
                throw SchemaError("bad problem line at line " + std::to_string(line_no));
            if (got_header)
                throw SchemaError("duplicate problem line at line " + std::to_string(line_no));
            got_header = true;
            file.vertices = static_cast<int>(v);
            declared_edges = e;
            continue;
        }
        if (line[0] == 'e') {
            if (!got_header)
                throw SchemaError("edge before problem line at line " + std::to_string(line_no));
            std::string e;
            int u = 0, v = 0;
            ls >> e >> u >> v;
            if (!ls || u < 1 || v < 1 || u > file.vertices || v > file.vertices || u == v)
                throw SchemaError("bad edge at line " + std::to_string(line_no));
            file.edges.emplace_back(u - 1, v - 1);
            continue;
        }
        throw SchemaError("unrecognized line " + std::to_string(line_no));
    }
    if (!got_header)
        throw SchemaError("missing problem line");
    if (declared_edges != static_cast<long long>(file.edges.size()))
        throw SchemaError("edge count mismatch: declared " + std::to_string(declared_edges) + ", found "
                          + std::to_string(file.edges.size()));
    return file;
}

void attach_labels(LabeledGraphFile& file, std::istream& sidecar)
{
    std::vector<VertexLabel> labels;
    int ground = kMaxGround; // parse permissively, tighten afterwards
    std::string line;
    int line_no = 0;
    int expected_index = 1;
    while (std::getline(sidecar, line)) {
        ++line_no;
        if (line.empty())
            continue;
        size_t tab1 = line.find('\t');
        size_t tab2 = tab1 == std::string::npos ? std::string::npos : line.find('\t', tab1 + 1);
        if (tab1 == std::string::npos || tab2 == std::string::npos)
            throw SchemaError("sidecar line " + std::to_string(line_no) + " is not index TAB {A} TAB {B}");
        int idx = 0;
        try {
            idx = std::stoi(line.substr(0, tab1));
        } catch (const std::exception&) {
            throw SchemaError("sidecar line " + std::to_string(line_no) + ": bad index");
        }
        if (idx != expected_index)
            throw SchemaError("sidecar line " + std::to_string(line_no) + ": indices must be 1..V in order");
        ++expected_index;
        Subset a = parse_braced_subset(ground, line.substr(tab1 + 1, tab2 - tab1 - 1));
        Subset b = parse_braced_subset(ground, line.substr(tab2 + 1));
        if (!a.disjoint_with(b))
            throw SchemaError("sidecar line " + std::to_string(line_no) + ": A and B overlap");
        labels.push_back(VertexLabel { a, b });
    }
    if (static_cast<int>(labels.size()) != file.vertices)
        throw SchemaError("sidecar has " + std::to_string(labels.size()) + " labels for "
                          + std::to_string(file.vertices) + " vertices");
    for (size_t i = 0; i < labels.size(); ++i)
        for (size_t j = i + 1; j < labels.size(); ++j)
            if (labels[i] == labels[j])
                throw SchemaError("duplicate label at sidecar lines " + std::to_string(i + 1) + " and "
                                  + std::to_string(j + 1));
    file.labels = std::move(labels);
}

std::string check_file_against_family(const LabeledGraphFile& file)
{
    if (file.family.empty())
        throw SchemaError("file has no family header to check against");
    if (static_cast<int>(file.labels.size()) != file.vertices)
        throw SchemaError("labels not attached");

    auto rule = [&](const VertexLabel& x, const VertexLabel& y) -> bool {
        if (file.family == "kneser")
            return x.a.disjoint_with(y.a);
        if (file.family == "local-complete" || file.family == "local-kneser")
            return x.a.is_subset_of(y.b) && y.a.is_subset_of(x.b);
        throw SchemaError("unknown family '" + file.family + "'");
    };

    std::vector<std::vector<bool>> listed(static_cast<size_t>(file.vertices),
                                          std::vector<bool>(static_cast<size_t>(file.vertices), false));
    for (auto [u, v] : file.edges) {
        listed[static_cast<size_t>(u)][static_cast<size_t>(v)] = true;
        listed[static_cast<size_t>(v)][static_cast<size_t>(u)] = true;
    }
    for (int u = 0; u < file.vertices; ++u)
        for (int v = u + 1; v < file.vertices; ++v) {
            bool want = rule(file.labels[static_cast<size_t>(u)], file.labels[static_cast<size_t>(v)]);
            bool have = listed[static_cast<size_t>(u)][static_cast<size_t>(v)];
            if (want != have)
                return "vertices " + std::to_string(u + 1) + " and " + std::to_string(v + 1)
                    + (want ? " should be adjacent but the edge is missing"
                            : " are listed adjacent but the rule says otherwise");
        }
    return "";
}

} // namespace lklab
