#include "qcartan/cache.hpp"

#include <cstdlib>
#include <fstream>
#include <string>

#include "qcartan/serialize.hpp"

namespace qcartan
{

std::filesystem::path DecompCache::default_root()
{
    if (const char *env = std::getenv("QCARTAN_CACHE_DIR"); env != nullptr && *env != '\0') {
        return env;
    }
    return "cache";
}

std::filesystem::path DecompCache::path_for(int n, int p) const
{
    return root_ / "decomp" / ("p" + std::to_string(p)) / ("n" + std::to_string(n) + ".json");
}

std::optional<DecompositionMatrix> DecompCache::load(int n, int p) const
{
    if (!enabled()) {
        return std::nullopt;
    }
    std::ifstream in(path_for(n, p));
    if (!in) {
        return std::nullopt;
    }
    try {
        DecompositionMatrix d = decomposition_from_cache(json::parse(in));
        if (d.n != n || d.p != p) {
            return std::nullopt;
        }
        return d;
    } catch (const std::exception &) {
        return std::nullopt;
    }
}

void DecompCache::store(const DecompositionMatrix &d) const
{
    if (!enabled()) {
        return;
    }
    const auto target = path_for(d.n, d.p);
    std::filesystem::create_directories(target.parent_path());
    auto tmp = target;
    tmp += ".tmp";
    {
        std::ofstream out(tmp);
        out << decomposition_to_cache(d).dump() << '\n';
        if (!out) {
            throw std::runtime_error("cache: cannot write " + tmp.string());
        }
    }
    std::filesystem::rename(tmp, target);
}

DecompositionMatrix DecompCache::get(int n, int p) const
{
    if (auto hit = load(n, p)) {
        return *std::move(hit);
    }
    DecompositionMatrix d = canonical_basis(n, p);
    store(d);
    return d;
}

GradedCartan DecompCache::get_cartan(int n, int p) const
{
    return cartan(get(n, p));
}

} // namespace qcartan
