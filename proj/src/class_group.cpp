#include "paraclass/class_group.hpp"

#include <deque>
#include <sstream>
#include <stdexcept>

namespace paraclass {

namespace {

constexpr long kExponentBound = 12;

std::string exp_key(const std::vector<long>& e) {
    std::ostringstream os;
    for (size_t i = 0; i < e.size(); i++) os << (i ? "," : "") << e[i];
    return os.str();
}

std::vector<Int> primes_up_to(const Int& bound) {
    std::vector<Int> ps;
    for (Int p = 2; p <= bound; p++)
        if (mpz_probab_prime_p(p.get_mpz_t(), 30)) ps.push_back(p);
    return ps;
}

}  // namespace

Int minkowski_bound(const MonogenicRing& r) {
    if (!r.is_domain() || !r.is_maximal)
        throw std::invalid_argument("minkowski_bound: maximal domain required");
    if (r.disc > 0) {
        Int s;
        mpz_sqrt(s.get_mpz_t(), r.disc.get_mpz_t());
        return s / 2;
    }
    // floor(2 sqrt(|disc|)/pi): largest k with k^2 pi^2 <= 4|disc|,
    // certified with rational bounds on pi^2
    Int ad = -r.disc;
    const Int scale = Int("100000000000000000000");  // 1e20
    const Int pi2_lo = Int("986960440108935861883");  // pi^2 * 1e20, rounded down
    const Int pi2_hi = Int("986960440108935861884");  // rounded up
    Int k = 0;
    while (true) {
        Int kk = (k + 1) * (k + 1);
        bool fits_hi = kk * pi2_hi <= 4 * ad * scale;
        bool fits_lo = kk * pi2_lo <= 4 * ad * scale;
        if (fits_hi != fits_lo)
            throw std::logic_error("minkowski_bound: pi precision exhausted");
        if (!fits_hi) break;
        k++;
    }
    return k;
}

ClassGroup compute_class_group(const MonogenicRing& r) {
    if (!r.is_domain()) throw std::invalid_argument("compute_class_group: not a domain");
    if (!r.is_maximal) throw std::invalid_argument("compute_class_group: non-maximal order");
    Int mb = minkowski_bound(r);

    ClassGroup cg;
    for (const Int& p : primes_up_to(mb)) {
        auto primes = primes_above(r, p);
        if (primes.size() == 1 && primes[0].residue_degree == 2) continue;  // inert, principal
        // one of a split pair generates the other's class
        cg.generators.push_back(primes[0].ideal);
    }
    size_t k = cg.generators.size();

    struct Node {
        std::vector<long> exp;
        IdealLattice ideal;
    };
    std::vector<Node> nodes;
    std::vector<std::vector<long>> relations;
    nodes.push_back({std::vector<long>(k, 0), unit_ideal(r)});
    std::deque<size_t> queue{0};
    while (!queue.empty()) {
        size_t cur = queue.front();
        queue.pop_front();
        for (size_t i = 0; i < k; i++) {
            std::vector<long> e = nodes[cur].exp;
            e[i]++;
            if (e[i] > kExponentBound)
                throw std::runtime_error("compute_class_group: exponent bound 12 exceeded");
            IdealLattice prod = ideal_mul(nodes[cur].ideal, cg.generators[i]);
            long hit = -1;
            for (size_t w = 0; w < nodes.size(); w++)
                if (ideals_equivalent(prod, nodes[w].ideal)) {
                    hit = static_cast<long>(w);
                    break;
                }
            if (hit < 0) {
                nodes.push_back({e, prod});
                queue.push_back(nodes.size() - 1);
            } else {
                std::vector<long> rel(k);
                bool nonzero = false;
                for (size_t t = 0; t < k; t++) {
                    rel[t] = e[t] - nodes[static_cast<size_t>(hit)].exp[t];
                    if (rel[t] != 0) nonzero = true;
                }
                if (nonzero) relations.push_back(rel);
            }
        }
    }

    if (k == 0) {
        cg.structure = AbelianGroupStructure{};
    } else {
        Mat rel(k, relations.size());
        for (size_t j = 0; j < relations.size(); j++)
            for (size_t i = 0; i < k; i++) rel.at(i, j) = relations[j][i];
        cg.structure = structure_from_presentation(k, rel);
    }
    if (!cg.structure.is_finite() || cg.structure.order() != Int(nodes.size()))
        throw std::logic_error("compute_class_group: relation lattice incomplete");

    for (const auto& n : nodes) cg.class_index.emplace(exp_key(n.exp), n.ideal);

    // per-generator certificates: the class order and an explicit
    // generator of that power
    for (const auto& g : cg.generators) {
        GeneratorCertificate cert;
        cert.prime = g;
        IdealLattice pow = g;
        long o = 1;
        while (true) {
            PrincipalityResult pr = is_principal(pow);
            if (pr.principal) {
                cert.order = o;
                cert.power_generator = *pr.generator;
                break;
            }
            if (++o > kExponentBound)
                throw std::runtime_error("compute_class_group: order bound 12 exceeded");
            pow = ideal_mul(pow, g);
        }
        cg.certificates.push_back(cert);
    }
    return cg;
}

ClassGroup compute_class_group_for_d(const Int& d) {
    return compute_class_group(maximal_order(d));
}

}  // namespace paraclass
