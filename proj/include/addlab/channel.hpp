#pragma once

#include <cstdint>
#include <memory>
#include <optional>
#include <string>
#include <variant>
#include <vector>

#include "addlab/matrix.hpp"

namespace addlab {

enum class NamedKind { Identity, WernerHolevo, Depolarize };

struct NamedRep {
    NamedKind kind;
    int dim;
    std::optional<Mat> sigma;  // Depolarize target
};

struct KrausRep {
    std::vector<Mat> ops;  // each dim_out x dim_in
};

struct SuperopRep {
    // dim_out^2 x dim_in^2 matrix acting on row-major vec(rho)
    Mat s;
    int dim_in;
    int dim_out;
};

struct CptpReport {
    bool trace_preserving;
    bool completely_positive;
    double max_violation;
};

// CPTP map (or, for Superoperator reps, an arbitrary linear map used by
// diagnostics such as the transpose-map test).
class Channel {
public:
    static Channel identity(int d);
    static Channel werner_holevo(int d);                 // rho -> (1 - rho^T)/(d-1)
    static Channel depolarize(const Mat& sigma);         // A -> Tr(A) sigma
    static Channel from_kraus(std::vector<Mat> ops, const std::string& spec = "kraus");
    static Channel from_superoperator(Mat s, int dim_in, int dim_out,
                                      const std::string& spec = "superop");

    int dim_in() const { return dim_in_; }
    int dim_out() const { return dim_out_; }
    const std::string& spec() const { return spec_; }

    bool is_named(NamedKind kind) const;
    bool is_named(NamedKind kind, int d) const;

    Mat apply(const Mat& rho) const;

    // Kraus operators; materialized on demand for Named reps. Throws for a
    // Superoperator rep whose Choi matrix is not PSD.
    const std::vector<Mat>& kraus() const;

    Mat choi() const;  // sum_ij E_ij (x) Phi(E_ij)

private:
    Channel() = default;
    std::variant<NamedRep, KrausRep, SuperopRep> rep_;
    int dim_in_ = 0, dim_out_ = 0;
    std::string spec_;
    mutable std::shared_ptr<std::vector<Mat>> kraus_cache_;

    Mat apply_named(const NamedRep& n, const Mat& rho) const;
};

Channel tensor(const Channel& a, const Channel& b);

struct ChannelPair {
    Channel left;
    Channel right;
    bool is_wh3_pair() const {
        return left.is_named(NamedKind::WernerHolevo, 3) &&
               right.is_named(NamedKind::WernerHolevo, 3);
    }
    std::string spec() const { return left.spec() + "," + right.spec(); }
};

CptpReport check_cptp(const Channel& ch);

// Spectrum-level covariance: output spectra are invariant under unitary
// conjugation of the input, checked on sampled Haar unitaries and pure states.
bool check_unitary_covariance(const Channel& ch, int unitary_samples, int state_samples,
                              uint64_t seed);

// "wh:3" | "id:3" | "depol:3" | "@kraus.json"
Channel parse_channel_spec(const std::string& spec);

}  // namespace addlab
