#pragma once

#include <cstdlib>
#include <filesystem>
#include <fstream>
#include <iostream>
#include <map>
#include <mutex>
#include <optional>
#include <string>
#include <vector>

#include <json.hpp>

#include "hurwitz/errors.hpp"
#include "hurwitz/partition.hpp"

namespace hurwitz {

inline constexpr int kDefaultTableCap = 14;

/// Complete table of irreducible S_n characters chi_lambda(mu).
/// Rows and columns are indexed by the partitions of n in canonical order.
class CharacterTable {
public:
    CharacterTable(int n, std::vector<Partition> partitions,
                   std::vector<std::vector<long long>> entries)
        : n_(n), partitions_(std::move(partitions)), entries_(std::move(entries)) {
        for (std::size_t i = 0; i < partitions_.size(); ++i)
            index_[partitions_[i]] = i;
    }

    int n() const { return n_; }
    const std::vector<Partition>& partitions() const { return partitions_; }
    const std::vector<std::vector<long long>>& entries() const { return entries_; }

    long long at(const Partition& lambda, const Partition& mu) const {
        return entries_[index(lambda)][index(mu)];
    }

    std::size_t index(const Partition& p) const {
        auto it = index_.find(p);
        if (it == index_.end())
            throw std::invalid_argument("partition " + p.to_string() +
                                        " is not a partition of " + std::to_string(n_));
        return it->second;
    }

private:
    int n_;
    std::vector<Partition> partitions_;
    std::vector<std::vector<long long>> entries_;
    std::map<Partition, std::size_t> index_;
};

namespace detail {

// Murnaghan-Nakayama on beta-sets: beta_i = lambda_i + (L - 1 - i).
// Removing a border strip of size r replaces one beta value by beta - r;
// the sign is (-1)^{number of beta values jumped over}.
inline long long mn_character(std::vector<int> lambda, std::vector<int> mu,
                              std::map<std::pair<std::vector<int>, std::vector<int>>, long long>& memo) {
    while (!lambda.empty() && lambda.back() == 0) lambda.pop_back();
    if (lambda.empty()) return mu.empty() ? 1 : 0;
    if (mu.empty()) return 0;

    auto key = std::make_pair(lambda, mu);
    if (auto it = memo.find(key); it != memo.end()) return it->second;

    int r = mu.front();
    std::vector<int> mu_rest(mu.begin() + 1, mu.end());

    int L = static_cast<int>(lambda.size());
    std::vector<int> beta(L);
    for (int i = 0; i < L; ++i) beta[i] = lambda[i] + (L - 1 - i);  // strictly decreasing

    long long total = 0;
    for (int i = 0; i < L; ++i) {
        int target = beta[i] - r;
        if (target < 0) continue;
        bool occupied = false;
        int jumped = 0;
        for (int j = 0; j < L; ++j) {
            if (j == i) continue;
            if (beta[j] == target) { occupied = true; break; }
            if (beta[j] < beta[i] && beta[j] > target) ++jumped;
        }
        if (occupied) continue;
        std::vector<int> nb;
        nb.reserve(L);
        for (int j = 0; j < L; ++j) nb.push_back(j == i ? target : beta[j]);
        std::sort(nb.begin(), nb.end(), std::greater<int>());
        std::vector<int> nl(L);
        for (int j = 0; j < L; ++j) nl[j] = nb[j] - (L - 1 - j);
        long long sub = mn_character(std::move(nl), mu_rest, memo);
        total += (jumped % 2 ? -sub : sub);
    }
    memo[key] = total;
    return total;
}

inline std::map<std::pair<std::vector<int>, std::vector<int>>, long long>& mn_memo() {
    static std::map<std::pair<std::vector<int>, std::vector<int>>, long long> memo;
    return memo;
}

inline std::mutex& mn_mutex() {
    static std::mutex m;
    return m;
}

}  // namespace detail

/// Exact irreducible character chi_lambda(mu), |lambda| = |mu|.
inline long long character(const Partition& lambda, const Partition& mu) {
    if (lambda.weight() != mu.weight())
        throw std::invalid_argument("character: |lambda| != |mu|");
    std::lock_guard<std::mutex> lock(detail::mn_mutex());
    return detail::mn_character(lambda.parts(), mu.parts(), detail::mn_memo());
}

/// Directory holding per-n character table cache files.
inline std::filesystem::path character_cache_dir() {
    if (const char* env = std::getenv("HURWITZ_CACHE_DIR")) return env;
    if (const char* xdg = std::getenv("XDG_CACHE_HOME"))
        return std::filesystem::path(xdg) / "hurwitz";
    if (const char* home = std::getenv("HOME"))
        return std::filesystem::path(home) / ".cache" / "hurwitz";
    return std::filesystem::temp_directory_path() / "hurwitz-cache";
}

namespace detail {

inline CharacterTable compute_character_table(int n) {
    auto parts = partitions_of(n);
    std::vector<std::vector<long long>> entries(parts.size(),
                                                std::vector<long long>(parts.size()));
    for (std::size_t i = 0; i < parts.size(); ++i)
        for (std::size_t j = 0; j < parts.size(); ++j)
            entries[i][j] = character(parts[i], parts[j]);
    return CharacterTable(n, std::move(parts), std::move(entries));
}

inline std::optional<CharacterTable> load_cached_table(const std::filesystem::path& file, int n) {
    std::ifstream in(file);
    if (!in) return std::nullopt;
    nlohmann::json j;
    try {
        in >> j;
        if (j.at("version").get<int>() != 1 || j.at("n").get<int>() != n) return std::nullopt;
        auto expected = partitions_of(n);
        auto names = j.at("partitions").get<std::vector<std::string>>();
        if (names.size() != expected.size()) return std::nullopt;
        for (std::size_t i = 0; i < names.size(); ++i)
            if (Partition::parse(names[i]) != expected[i]) return std::nullopt;
        auto table = j.at("table").get<std::vector<std::vector<long long>>>();
        if (table.size() != expected.size()) return std::nullopt;
        for (auto& row : table)
            if (row.size() != expected.size()) return std::nullopt;
        return CharacterTable(n, std::move(expected), std::move(table));
    } catch (const nlohmann::json::exception&) {
        return std::nullopt;
    }
}

inline void store_cached_table(const std::filesystem::path& file, const CharacterTable& table) {
    nlohmann::json j;
    j["version"] = 1;
    j["n"] = table.n();
    std::vector<std::string> names;
    for (auto& p : table.partitions()) names.push_back(p.to_string());
    j["partitions"] = names;
    j["table"] = table.entries();
    std::error_code ec;
    std::filesystem::create_directories(file.parent_path(), ec);
    if (ec) return;  // cache is advisory
    auto tmp = file;
    tmp += ".tmp";
    {
        std::ofstream out(tmp);
        if (!out) return;
        out << j.dump();
    }
    std::filesystem::rename(tmp, file, ec);
}

}  // namespace detail

/// The full character table of S_n. Results come from a per-n disk cache when a
/// valid one exists; a corrupt cache is recomputed and overwritten with a warning.
inline const CharacterTable& character_table(int n, int cap = kDefaultTableCap) {
    if (n < 1) throw std::invalid_argument("character_table: n must be >= 1");
    if (n > cap)
        throw CapExceededError("character_table: n = " + std::to_string(n) +
                               " exceeds the configured cap " + std::to_string(cap));
    static std::map<int, CharacterTable> tables;
    static std::mutex mutex;
    std::lock_guard<std::mutex> lock(mutex);
    if (auto it = tables.find(n); it != tables.end()) return it->second;

    auto file = character_cache_dir() / ("character-table-" + std::to_string(n) + ".json");
    if (auto cached = detail::load_cached_table(file, n)) {
        return tables.emplace(n, std::move(*cached)).first->second;
    }
    if (std::filesystem::exists(file))
        std::cerr << "warning: character table cache " << file.string()
                  << " is unusable; recomputing\n";
    CharacterTable table = detail::compute_character_table(n);
    detail::store_cached_table(file, table);
    return tables.emplace(n, std::move(table)).first->second;
}

}  // namespace hurwitz
