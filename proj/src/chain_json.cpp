#include "spinchain/chain_json.hpp"

#include <fstream>

#include "json.hpp"

#include "spinchain/errors.hpp"

namespace spinchain {

namespace {

std::vector<double> number_array(const nlohmann::json& j, const char* key) {
    if (!j.contains(key) || !j[key].is_array())
        throw InvalidChainFile(std::string("chain file needs array key \"") + key + "\"");
    std::vector<double> out;
    out.reserve(j[key].size());
    for (const auto& v : j[key]) {
        if (!v.is_number()) throw InvalidChainFile(std::string(key) + " holds a non-number");
        out.push_back(v.get<double>());
    }
    return out;
}

} // namespace

std::string chain_to_json_string(const ChainSpec& chain) {
    nlohmann::json j;
    j["n_sites"] = chain.sites();
    j["couplings"] = chain.couplings;
    j["fields"] = chain.fields;
    return j.dump(2) + "\n";
}

ChainSpec chain_from_json_string(const std::string& text) {
    nlohmann::json j = nlohmann::json::parse(text, nullptr, /*allow_exceptions=*/false);
    if (j.is_discarded()) throw InvalidChainFile("chain file is not valid JSON");
    if (!j.is_object()) throw InvalidChainFile("chain file must be a JSON object");
    if (!j.contains("n_sites") || !j["n_sites"].is_number_integer())
        throw InvalidChainFile("chain file needs integer key \"n_sites\"");
    const auto n_sites = j["n_sites"].get<long long>();
    if (n_sites < 1) throw InvalidChainFile("n_sites must be at least 1");

    std::vector<double> couplings = number_array(j, "couplings");
    std::vector<double> fields = number_array(j, "fields");
    if (fields.size() != static_cast<std::size_t>(n_sites) ||
        couplings.size() + 1 != fields.size())
        throw InvalidChainFile("chain file lengths are inconsistent with n_sites");

    try {
        // files may legitimately carry deformed chains with signed couplings
        return new_chain(std::move(couplings), std::move(fields), /*allow_signed=*/true);
    } catch (const std::invalid_argument& e) {
        throw InvalidChainFile(e.what());
    }
}

void save_chain_json(const ChainSpec& chain, const std::filesystem::path& path) {
    std::ofstream out(path);
    if (!out) throw InvalidChainFile("cannot open " + path.string() + " for writing");
    out << chain_to_json_string(chain);
    if (!out) throw InvalidChainFile("failed writing " + path.string());
}

ChainSpec load_chain_json(const std::filesystem::path& path) {
    std::ifstream in(path);
    if (!in) throw InvalidChainFile("cannot open " + path.string());
    std::string text((std::istreambuf_iterator<char>(in)), std::istreambuf_iterator<char>());
    return chain_from_json_string(text);
}

} // namespace spinchain
