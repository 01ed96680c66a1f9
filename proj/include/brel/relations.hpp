#pragma once

#include <map>
#include <memory>
#include <string>
#include <vector>

#include "brel/burnside.hpp"
#include "brel/exact.hpp"
#include "brel/ratrep.hpp"
#include "brel/subgroup_lattice.hpp"

namespace brel {

enum class GeneratorKind { Theta, Type1, Type2, Type3, Induft };

/// Defining data of a relation generator. Theta/Induft records carry a
/// Gamma-lattice pair (k, n); Type 1/2/3 records carry a G-lattice pair
/// (gprime, other) and, where applicable, the hom's values on the stored
/// generators of its domain.
struct Provenance {
    int k = -1, n = -1;
    int gprime = -1, other = -1;
    std::vector<int> hom;
};

struct GeneratorRecord {
    GeneratorKind kind = GeneratorKind::Theta;
    Provenance provenance;
    BurnsideElement element;
};

struct Certificate {
    BurnsideElement target;
    std::vector<std::pair<GeneratorRecord, Int>> terms;
};

/// Induf(Theta_{K/N}) = N - sum C' + pK for K/N of type [p,p]; C' runs over
/// the p+1 intermediate subgroups.
GeneratorRecord theta_induft(const LatticeIndex& idx, const Subgroup& K, const Subgroup& N);
GeneratorRecord theta_induft(const LatticeIndex& idx, int kPos, int nPos);

/// K(Gamma): the kernel of the full linearization matrix, over subgroup
/// coordinates.
Lattice kernel_absolute(const LatticeIndex& idx);

/// K(G,C_p): kernel of the graphs-only linearization, embedded back into
/// full B(Gamma) coordinates.
Lattice kernel_relative(const ProductContext& ctx);

/// All Type 1/2/3 generators of the ambient product.
std::vector<GeneratorRecord> classified_generators(const ProductContext& ctx);

/// Single Type 1/2/3 builders (positions in the G-lattice; hom values on
/// stored generators of the relevant domain).
GeneratorRecord type1_record(const ProductContext& ctx, int gPos, int lPos, const std::vector<int>& alphaGens);
GeneratorRecord type2_record(const ProductContext& ctx, int gPos, int cPos, const std::vector<int>& betaGens);
GeneratorRecord type3_record(const ProductContext& ctx, int gPos, int lPos);

/// Graph-supported part of the indufted kernel of one [p,p,p] sub-quotient
/// pair (positions in the Gamma lattice).
Lattice induft_relative_lattice(const ProductContext& ctx, int kPos, int nPos);

/// K'(G,C_p): the sum of induft_relative_lattice over every [p,p,p] pair.
Lattice kprime(const ProductContext& ctx);

/// Solves relative relations as integer combinations of indufted [p,p,p]
/// generators. Construction walks every pair once; decompose() is then cheap.
class CertificateSolver {
public:
    explicit CertificateSolver(const ProductContext& ctx);

    /// Throws NotARelation when x is outside K(G,C_p) and NoCertificate when
    /// no integral combination exists (a falsification of the generation
    /// theorem).
    Certificate decompose(const BurnsideElement& x) const;

    int generators_seen() const { return seen_; }
    int generators_kept() const { return static_cast<int>(records_.size()); }

    /// The relative kernel K(G,C_p) computed at construction.
    const Lattice& relative_kernel() const { return kRel_; }

private:
    const ProductContext& ctx_;
    Lattice kRel_;
    SpanSolver solver_;
    std::map<int, GeneratorRecord> records_;
    int seen_ = 0;
};

Certificate decompose_relation(const ProductContext& ctx, const BurnsideElement& x);

/// The Type-2 telescope of a descending resolution (our Resolution chains
/// ascend; the combination is sum p^{i-1} B_{chain[i], chain[i-1], eps}).
BurnsideElement telescope(const ProductContext& ctx, const Resolution& r);

/// Telescope signature identity: sigma(telescope) = -G_e + p^e G_0.
bool telescope_check(const ProductContext& ctx, const Resolution& r);

/// Difference of two same-endpoint telescopes lies in K'.
bool telescope_difference_in_kprime(const ProductContext& ctx, const Resolution& a,
                                    const Resolution& b, const Lattice& kPrime);

struct CheckResult {
    std::string name;
    bool pass = false;
    std::string detail;
};

struct VerifyReport {
    std::string group;
    long long rank_kGamma = 0;
    long long rank_kRel = 0;
    long long rank_bG = 0;        // #subgroups of G
    long long cyclic_gamma = 0;   // #cyclic subgroups of Gamma
    bool thm37_equal = false;
    Int thm37_index = 0;          // [kRel : kprime] when comparable
    bool thm55_saturation_equal = false;
    Int thm55_index = 0;          // [kRel : selection span]
    std::vector<CheckResult> checks;
    bool all_pass = false;
};

VerifyReport verify_main_theorem(const GroupSpec& g);
VerifyReport verify_main_theorem(const ProductContext& ctx);

/// Throws VerificationFailure naming every failed check.
void require_verified(const VerifyReport& report);

/// The worked C_2 x C_2 example with its published subgroup labels.
struct KahnReport {
    int subgroup_count = 0;
    long long rank_kGamma = 0;
    long long rank_kRel = 0;
    std::vector<int> label_pos;  // canonical position of e_1..e_16
    std::vector<std::pair<std::string, std::string>> generators;  // E_i -> expansion
    bool generators_in_kernel = false;
    bool paper_basis_equals_kRel = false;
    bool kahn_basis_equals_kRel = false;
    bool reconciliation_identity = false;
    bool pass = false;
};

KahnReport kahn_report();

}  // namespace brel
