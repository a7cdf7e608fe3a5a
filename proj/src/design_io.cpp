#include "steinerlab/design_io.hpp"

#include <fstream>
#include <sstream>
#include <stdexcept>

#include <json.hpp>

namespace steinerlab {

using nlohmann::json;

std::string design_to_json(const SteinerSystem& sys) {
    json j;
    j["t"] = sys.params.t;
    j["n"] = sys.params.n;
    j["v"] = sys.params.v;
    json blocks = json::array();
    for (Mask b : sys.blocks.blocks) blocks.push_back(BlockFamily::to_points(b));
    j["blocks"] = blocks;
    return j.dump();
}

SteinerSystem design_from_json(const std::string& text) {
    json j;
    try {
        j = json::parse(text);
    } catch (const json::parse_error& e) {
        throw std::invalid_argument(std::string("design JSON: ") + e.what());
    }
    if (!j.is_object() || !j.contains("t") || !j.contains("n") || !j.contains("v") ||
        !j.contains("blocks"))
        throw std::invalid_argument("design JSON: need fields t, n, v, blocks");
    DesignParams p(j["t"].get<int>(), j["n"].get<int>(), j["v"].get<int>());
    std::vector<Mask> blocks;
    for (const auto& b : j["blocks"])
        blocks.push_back(BlockFamily::from_points(b.get<std::vector<int>>(), p.v));
    return {p, BlockFamily(p.v, p.n, std::move(blocks))};
}

SteinerSystem load_design_file(const std::string& path) {
    std::ifstream in(path);
    if (!in) throw std::invalid_argument("cannot open design file: " + path);
    std::ostringstream buf;
    buf << in.rdbuf();
    return design_from_json(buf.str());
}

void save_design_file(const SteinerSystem& sys, const std::string& path) {
    std::ofstream out(path);
    if (!out) throw std::invalid_argument("cannot write design file: " + path);
    out << design_to_json(sys) << "\n";
}

}  // namespace steinerlab
