#ifndef QCARTAN_CACHE_HPP
#define QCARTAN_CACHE_HPP

#include <filesystem>
#include <optional>

#include "qcartan/fock.hpp"

namespace qcartan
{

// Disk cache of decomposition matrices under <root>/decomp/p<P>/n<N>.json.
// An empty root disables the cache.
class DecompCache
{
public:
    DecompCache() = default;
    explicit DecompCache(std::filesystem::path root) : root_(std::move(root)) {}

    // QCARTAN_CACHE_DIR if set, else "cache".
    static std::filesystem::path default_root();

    bool enabled() const
    {
        return !root_.empty();
    }
    const std::filesystem::path &root() const
    {
        return root_;
    }
    std::filesystem::path path_for(int n, int p) const;

    // Missing, unreadable and stale files all read as a miss.
    std::optional<DecompositionMatrix> load(int n, int p) const;
    void store(const DecompositionMatrix &d) const;
    DecompositionMatrix get(int n, int p) const;
    GradedCartan get_cartan(int n, int p) const;

private:
    std::filesystem::path root_;
};

} // namespace qcartan

#endif
