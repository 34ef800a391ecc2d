#include "tritsynth/oracle.hpp"

#include <sstream>
#include <thread>

#include "json.hpp"

namespace tritsynth {

namespace {

// The lazily built rewrite and remainder tables must exist before worker
// threads start querying them.
void warm_tables() {
    normalize(GateString{});
    exact_synthesize(UMat::identity());
}

// Runs fn(index, key, record) over all atlas entries on a few threads;
// violation lists are merged per thread, which keeps reports deterministic.
template <typename Fn>
CheckReport parallel_check(const GroupAtlas& atlas, Fn fn) {
    warm_tables();
    std::vector<const std::pair<const std::string, AtlasRecord>*> items;
    items.reserve(atlas.entries.size());
    for (const auto& kv : atlas.entries) items.push_back(&kv);

    const unsigned n_threads =
        std::max(1u, std::min(std::thread::hardware_concurrency(), 16u));
    std::vector<std::vector<std::string>> partial(n_threads);
    std::vector<std::thread> workers;
    for (unsigned w = 0; w < n_threads; ++w)
        workers.emplace_back([&, w] {
            for (std::size_t i = w; i < items.size(); i += n_threads)
                fn(i, items[i]->first, items[i]->second, partial[w]);
        });
    for (auto& t : workers) t.join();

    CheckReport report;
    report.checked = items.size();
    for (auto& part : partial)
        for (auto& v : part) report.violations.push_back(std::move(v));
    return report;
}

} // namespace

namespace {

struct Node {
    PhasedOp op;
    GateString witness;
};

AtlasRecord make_record(unsigned t, const Node& node) {
    AtlasRecord rec;
    rec.min_t_count = t;
    rec.witness = unparse(node.witness);
    rec.denom_exp = node.op.mat().denom_exp();
    return rec;
}

} // namespace

GroupAtlas bfs_enumerate(unsigned max_t, std::size_t max_elements) {
    GroupAtlas atlas;
    std::vector<Node> layer;

    auto insert = [&](unsigned t, PhasedOp op, GateString witness) {
        std::string key = canonical_key(op);
        auto [it, fresh] = atlas.entries.try_emplace(std::move(key));
        if (!fresh) return false;
        Node node{std::move(op), std::move(witness)};
        it->second = make_record(t, node);
        layer.push_back(std::move(node));
        return true;
    };

    // Clifford closure at cost 0: left-multiply by H and S until stable.
    auto close_layer = [&](unsigned t) {
        for (std::size_t i = 0; i < layer.size(); ++i) {
            if (atlas.entries.size() >= max_elements) {
                atlas.complete = false;
                return;
            }
            for (const Gate g : {Gate::H, Gate::S}) {
                GateString w;
                w.reserve(layer[i].witness.size() + 1);
                w.push_back(g == Gate::H ? Token::H : Token::S);
                w.insert(w.end(), layer[i].witness.begin(), layer[i].witness.end());
                insert(t, gate_matrix(g) * layer[i].op, std::move(w));
            }
        }
    };

    insert(0, PhasedOp::identity(), {});
    close_layer(0);
    atlas.layer_sizes.push_back(layer.size());

    for (unsigned t = 1; t <= max_t && atlas.complete; ++t) {
        std::vector<Node> prev;
        prev.swap(layer);
        const PhasedOp& tm = gate_matrix(Gate::T);
        for (const auto& node : prev) {
            if (atlas.entries.size() >= max_elements) {
                atlas.complete = false;
                break;
            }
            PhasedOp m1 = tm * node.op;
            GateString w1;
            w1.reserve(node.witness.size() + 2);
            w1.push_back(Token::T);
            w1.insert(w1.end(), node.witness.begin(), node.witness.end());
            PhasedOp m2 = tm * m1;
            GateString w2;
            w2.reserve(node.witness.size() + 2);
            w2.push_back(Token::T);
            w2.push_back(Token::T);
            w2.insert(w2.end(), node.witness.begin(), node.witness.end());
            insert(t, std::move(m1), std::move(w1));
            insert(t, std::move(m2), std::move(w2));
        }
        close_layer(t);
        atlas.layer_sizes.push_back(layer.size());
    }

    // h-counts come from the rewrite engine; fill them in parallel
    warm_tables();
    std::vector<AtlasRecord*> records;
    records.reserve(atlas.entries.size());
    for (auto& kv : atlas.entries) records.push_back(&kv.second);
    const unsigned n_threads =
        std::max(1u, std::min(std::thread::hardware_concurrency(), 16u));
    std::vector<std::thread> workers;
    for (unsigned w = 0; w < n_threads; ++w)
        workers.emplace_back([&records, w, n_threads] {
            for (std::size_t i = w; i < records.size(); i += n_threads)
                records[i]->h_count = normalize(parse_gate_string(records[i]->witness)).h_count();
        });
    for (auto& t : workers) t.join();
    return atlas;
}

namespace {

std::string nf_structure_key(const NormalForm& nf) {
    std::string s;
    s += static_cast<char>('0' + nf.lead_t);
    for (const auto& pr : nf.body) {
        s += static_cast<char>('a' + pr.h);
        s += static_cast<char>('0' + pr.t);
    }
    s += nf.tail_h ? static_cast<char>('A' + *nf.tail_h) : '.';
    s += static_cast<char>('0' + nf.tail_p.index() / 27);
    s += static_cast<char>('0' + nf.tail_p.index() % 27);
    return s;
}

} // namespace

CheckReport check_uniqueness(const GroupAtlas& atlas) {
    std::vector<std::string> structures(atlas.entries.size());
    CheckReport report = parallel_check(
        atlas, [&structures](std::size_t i, const std::string&, const AtlasRecord& rec,
                             std::vector<std::string>& out) {
            const GateString witness = parse_gate_string(rec.witness);
            const PhasedOp m = string_to_matrix(witness);
            const NormalForm nf = normalize(witness);
            structures[i] = nf_structure_key(nf);

            if (!(nf_matrix(nf).scaled(nf.phase) == m))
                out.push_back("normalize not exact for witness " + rec.witness);
            if (nf.t_count() != rec.min_t_count)
                out.push_back("t_count " + std::to_string(nf.t_count()) + " != BFS minimum " +
                              std::to_string(rec.min_t_count) + " for witness " + rec.witness);

            const SynthResult syn = exact_synthesize(m.mat());
            if (!syn.member)
                out.push_back("exact_synthesize rejected witness " + rec.witness + " (" +
                              SynthResult::reason_name(syn.reason) + ")");
            else if (!syn.nf.same_structure(nf))
                out.push_back("normalize and exact_synthesize disagree for witness " + rec.witness);
        });

    std::map<std::string, std::size_t> nf_seen;
    std::size_t i = 0;
    for (const auto& [key, rec] : atlas.entries) {
        const auto [it, fresh] = nf_seen.try_emplace(structures[i], i);
        if (!fresh)
            report.violations.push_back("normal form shared by witness " + rec.witness +
                                        " and entry " + std::to_string(it->second));
        ++i;
    }
    return report;
}

CheckReport check_denom_law(const GroupAtlas& atlas) {
    return parallel_check(atlas, [](std::size_t, const std::string&, const AtlasRecord& rec,
                                    std::vector<std::string>& out) {
        const unsigned expected_k = rec.h_count >= 1 ? rec.h_count + 2 : 0;
        if (rec.denom_exp != expected_k) {
            out.push_back("k = " + std::to_string(rec.denom_exp) + " but h = " +
                          std::to_string(rec.h_count) + " for witness " + rec.witness);
            return;
        }
        const PhasedOp m = string_to_matrix(parse_gate_string(rec.witness));
        if (!parity_prefilter(m.mat()))
            out.push_back("parity certificate failed for witness " + rec.witness);
    });
}

std::string atlas_to_jsonl(const GroupAtlas& atlas) {
    std::ostringstream os;
    for (const auto& [key, rec] : atlas.entries) {
        nlohmann::json j{{"min_t_count", rec.min_t_count},
                         {"witness", rec.witness},
                         {"h_count", rec.h_count},
                         {"denom_exp", rec.denom_exp}};
        os << j.dump() << "\n";
    }
    return os.str();
}

} // namespace tritsynth
