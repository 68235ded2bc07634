#include "cdc/heuristic.hpp"

#include <algorithm>
#include <fstream>
#include <ostream>
#include <set>
#include <sstream>
#include <stdexcept>

#include "cdc/errors.hpp"

namespace cdc {

void HeuristicParams::validate(int ub) const {
    if (delta1 < 0 || delta2 < 0) throw std::invalid_argument("heuristic: deltas must be >= 0");
    if (delta1 + delta2 > ub)
        throw std::invalid_argument("heuristic: requires delta1 + delta2 <= ub");
    if (ub_increment <= 0) throw std::invalid_argument("heuristic: ub increment must be positive");
}

namespace {

// Ordered, deduplicated list of harvested cliques with lowest-weight eviction.
class HarvestList {
  public:
    HarvestList(const SkeletonGraph& g, std::size_t cap) : g_(g), cap_(cap) {}

    void add(std::vector<int> members) {
        if (!seen_.insert(members).second) return;
        BigInt w = 0;
        for (int v : members) w += g_.weight(v);
        if (entries_.size() < cap_) {
            entries_.push_back(Clique{std::move(members), std::move(w)});
            return;
        }
        std::size_t min_at = 0;
        for (std::size_t i = 1; i < entries_.size(); ++i)
            if (entries_[i].weight < entries_[min_at].weight) min_at = i;
        if (w > entries_[min_at].weight) entries_[min_at] = Clique{std::move(members), std::move(w)};
    }

    std::vector<Clique> take() { return std::move(entries_); }

  private:
    const SkeletonGraph& g_;
    std::size_t cap_;
    std::set<std::vector<int>> seen_;
    std::vector<Clique> entries_;
};

}  // namespace

HeuristicResult heuristic_round(const SkeletonGraph& g, const std::vector<Clique>& seeds,
                                const HeuristicParams& p, int ub) {
    p.validate(ub);
    const int threshold = ub - p.delta2;
    const int keep = ub - p.delta2 - p.delta1;
    HarvestList harvest(g, p.list_cap);

    SearchOptions opts;
    opts.ub = ub;
    opts.hook = [&](const std::vector<int>& members, const BigInt&) {
        if (static_cast<int>(members.size()) >= threshold)
            harvest.add(std::vector<int>(members.begin(), members.begin() + keep));
    };

    HeuristicResult result;
    result.final_ub = ub;
    // one incumbent across all seeds of the round; later dives prune against it
    Clique best;
    for (const Clique& seed : seeds) {
        if (static_cast<int>(seed.size()) > ub) continue;
        Clique found = dive_from_seed(g, seed, opts, best.weight);
        if (found.weight > best.weight) best = found;
    }
    result.best = std::move(best);
    result.next_list = harvest.take();
    return result;
}

HeuristicResult heuristic_search(const SkeletonGraph& g, std::vector<Clique> seeds,
                                 const HeuristicParams& p, std::ostream* progress,
                                 const std::atomic<bool>* stop) {
    if (seeds.empty()) seeds.push_back(Clique{});
    int ub = std::min(p.ub_start, g.vertex_count());
    if (ub < 1) ub = 1;
    p.validate(ub);

    HeuristicResult overall;
    overall.final_ub = ub;
    int round = 0;
    for (;;) {
        ++round;
        HeuristicResult r = heuristic_round(g, seeds, p, ub);
        const bool improved = r.best.weight > overall.best.weight;
        if (improved) overall.best = r.best;
        overall.next_list = r.next_list;
        overall.rounds = round;
        overall.final_ub = ub;
        if (progress)
            *progress << "round " << round << ": ub=" << ub << " best=" << overall.best.weight
                      << " (" << overall.best.size() << " vectors), harvested "
                      << r.next_list.size() << " seeds\n";
        if (stop && stop->load(std::memory_order_relaxed)) break;
        if (p.max_rounds > 0 && round >= p.max_rounds) break;
        if (!improved) break;
        if (ub >= g.vertex_count()) break;
        seeds = r.next_list;
        if (seeds.empty()) seeds.push_back(Clique{});
        ub = std::min(ub + p.ub_increment, g.vertex_count());
    }
    return overall;
}

void Checkpoint::save(std::ostream& out) const {
    out << n << ' ' << d << ' ' << k << ' ' << q << ' ' << ub << ' ' << round << '\n';
    for (const auto& clique : cliques) {
        for (std::size_t i = 0; i < clique.size(); ++i) {
            if (i) out << ' ';
            out << clique[i];
        }
        out << '\n';
    }
}

void Checkpoint::save_file(const std::string& path) const {
    std::ofstream out(path);
    if (!out) throw ValidationError("cannot write checkpoint file " + path);
    save(out);
}

Checkpoint Checkpoint::load(std::istream& in) {
    Checkpoint c;
    std::string line;
    if (!std::getline(in, line)) throw ValidationError("checkpoint: missing header");
    std::istringstream header(line);
    if (!(header >> c.n >> c.d >> c.k >> c.q >> c.ub >> c.round))
        throw ValidationError("checkpoint: malformed header (want `n d k q ub round`)");
    while (std::getline(in, line)) {
        std::istringstream ss(line);
        std::vector<std::uint64_t> clique;
        std::uint64_t enc;
        while (ss >> enc) clique.push_back(enc);
        if (!clique.empty()) c.cliques.push_back(std::move(clique));
    }
    return c;
}

Checkpoint Checkpoint::load_file(const std::string& path) {
    std::ifstream in(path);
    if (!in) throw ValidationError("cannot open checkpoint file " + path);
    return load(in);
}

std::vector<Clique> Checkpoint::to_cliques(const SkeletonGraph& g) const {
    if (g.n() != n || g.d() != d || g.k() != k || g.q() != q)
        throw ValidationError("checkpoint: graph parameters do not match header");
    std::vector<Clique> out;
    for (const auto& encs : cliques) {
        std::vector<int> members;
        for (std::uint64_t e : encs) {
            const auto idx = g.index_of(e);
            if (!idx)
                throw ValidationError("checkpoint: encoding " + std::to_string(e) +
                                      " is not a vertex of this graph (was a filter dropped?)");
            members.push_back(*idx);
        }
        out.push_back(make_clique(g, std::move(members)));
    }
    return out;
}

Checkpoint Checkpoint::from_cliques(const SkeletonGraph& g, const std::vector<Clique>& cliques,
                                    int ub, int round) {
    Checkpoint c;
    c.n = g.n();
    c.d = g.d();
    c.k = g.k();
    c.q = g.q();
    c.ub = ub;
    c.round = round;
    for (const Clique& clique : cliques) {
        std::vector<std::uint64_t> encs;
        for (int v : clique.members) encs.push_back(g.encoding(v));
        c.cliques.push_back(std::move(encs));
    }
    return c;
}

}  // namespace cdc
