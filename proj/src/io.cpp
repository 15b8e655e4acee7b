#include "cc/io.hpp"

#include <fstream>
#include <sstream>

#include <json.hpp>

namespace cc {

using nlohmann::json;

PermGroup group_from_json(const std::string& text) {
    json j = json::parse(text);
    PermGroup g;
    g.degree = j.at("degree").get<int>();
    for (const auto& images : j.at("generators"))
        g.generators.emplace_back(images.get<std::vector<int>>());
    for (const Perm& p : g.generators)
        if (p.degree() != g.degree)
            throw validation_error("group file: generator degree mismatch");
    if (j.contains("name")) g.name = j["name"].get<std::string>();
    return g;
}

std::string group_to_json(const PermGroup& g) {
    json j;
    j["degree"] = g.degree;
    j["generators"] = json::array();
    for (const Perm& p : g.generators) j["generators"].push_back(p.images());
    if (!g.name.empty()) j["name"] = g.name;
    return j.dump();
}

ColorGraph color_graph_from_json(const std::string& text) {
    json j = json::parse(text);
    int n = j.at("n").get<int>();
    auto colors = j.at("colors").get<std::vector<int>>();
    return ColorGraph::from_matrix(n, colors);
}

std::string color_graph_to_json(const ColorGraph& x) {
    json j;
    j["n"] = x.n();
    j["colors"] = x.matrix();
    return j.dump();
}

std::string tensor_to_tsv(const IntersectionTensor& t) {
    std::ostringstream out;
    for (ColorId u = 0; u < t.rank; ++u)
        for (const auto& [key, c] : t.by_result[u])
            out << key.first << '\t' << key.second << '\t' << u << '\t' << c << '\n';
    return out.str();
}

std::string rep_to_json(const SphericalRep& rep) {
    json j;
    j["matrix"] = to_string(rep.kind);
    j["lambda"] = rep.lambda;
    j["points"] = json::array();
    for (const auto& p : rep.points) j["points"].push_back({p[0], p[1], p[2]});
    j["W"] = rep.W;
    j["w_of_color"] = rep.w_of_color;
    j["antipodal_classes"] = rep.antipodal.classes;
    return j.dump();
}

std::string certificate_to_json(const RigidityCertificate& cert) {
    json j;
    j["seed"] = cert.seed;
    j["seed_color"] = cert.seed_color;
    j["rigid"] = cert.rigid;
    j["final_size"] = cert.final_size;
    j["trace"] = json::array();
    for (const ClosureStep& s : cert.trace)
        j["trace"].push_back({{"gamma", s.gamma},
                              {"alpha", s.alpha},
                              {"beta", s.beta},
                              {"u", s.u},
                              {"v", s.v}});
    return j.dump();
}

RigidityCertificate certificate_from_json(const std::string& text) {
    json j = json::parse(text);
    RigidityCertificate cert;
    cert.seed = {j.at("seed")[0].get<int>(), j.at("seed")[1].get<int>()};
    cert.seed_color = j.at("seed_color").get<int>();
    cert.rigid = j.at("rigid").get<bool>();
    cert.final_size = j.at("final_size").get<int>();
    for (const auto& s : j.at("trace"))
        cert.trace.push_back({s.at("gamma").get<int>(), s.at("alpha").get<int>(),
                              s.at("beta").get<int>(), s.at("u").get<int>(),
                              s.at("v").get<int>()});
    return cert;
}

std::string read_file(const std::string& path) {
    std::ifstream in(path, std::ios::binary);
    if (!in) throw validation_error("cannot open file '" + path + "'");
    std::ostringstream buf;
    buf << in.rdbuf();
    return buf.str();
}

void write_file(const std::string& path, const std::string& content) {
    std::ofstream out(path, std::ios::binary);
    if (!out) throw validation_error("cannot write file '" + path + "'");
    out << content;
}

} // namespace cc
