// Chain file format: JSON object with keys "n_sites" (integer, n + 1),
// "couplings" (n numbers) and "fields" (n + 1 numbers). Serialization
// round-trips doubles exactly.
#pragma once

#include <filesystem>
#include <string>

#include "spinchain/chain.hpp"

namespace spinchain {

std::string chain_to_json_string(const ChainSpec& chain);
ChainSpec chain_from_json_string(const std::string& text);

void save_chain_json(const ChainSpec& chain, const std::filesystem::path& path);
ChainSpec load_chain_json(const std::filesystem::path& path);

} // namespace spinchain
