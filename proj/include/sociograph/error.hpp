#pragma once

#include <stdexcept>
#include <string>

namespace sociograph {

// Every failure the library reports, one code per contract violation.
enum class Errc {
    duplicate_label,
    empty_label,
    self_loop,
    duplicate_edge,
    unknown_node,
    nonpositive_weight,
    mode_mismatch,
    malformed_row,
    non_square,
    asymmetric_undirected,
    negative_entry,
    nonzero_diagonal,
    unknown_alter_column,
    negative_rating,
    nonfinite_score,
    unweighted_graph,
    not_connected,
    no_convergence,
    alpha_too_large,
    directed_unsupported,
    isolated_node,
    ego_mismatch,
    empty_graph,
    unassigned_node,
    node_absent_from_layer,
    same_layer_interlayer,
    multiplex_violation,
    registry_mismatch,
    size_too_small,
    bad_parameters,
};

const char* errc_name(Errc code) noexcept;

class Error : public std::runtime_error {
public:
    Error(Errc code, const std::string& message)
        : std::runtime_error(std::string(errc_name(code)) + ": " + message), code_(code) {}

    Errc code() const noexcept { return code_; }

private:
    Errc code_;
};

[[noreturn]] inline void fail(Errc code, const std::string& message) {
    throw Error(code, message);
}

} // namespace sociograph
