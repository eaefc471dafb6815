#pragma once

#include <string>
#include <string_view>

#include "dqa/simplex.hpp"

namespace dqa {

/// Which nearness notion a Q-digraph is built from: NOVEL uses face maps of
/// (q+1)-dimensional sub-faces, HAT uses clamped face maps of the simplices
/// themselves.
enum class Definition { Novel, Hat };

std::string_view to_string(Definition d);
/// Accepts "novel" or "hat"; throws std::invalid_argument otherwise.
Definition parse_definition(std::string_view token);

/// Ordered pair of face maps plus the definition they belong to.
struct Direction {
  FaceIndex i;
  FaceIndex j;
  Definition definition = Definition::Novel;

  bool operator==(const Direction&) const = default;
};

/// Throws std::invalid_argument for q < 0 or, under NOVEL, an integer index
/// outside {0, ..., q+1}.
void validate_direction(const Direction& dir, int q);

/// Criterion [II] of the novel definition with resolved positions i, j in
/// {0..q+1}: some q-simplex equals d_i of a (q+1)-face of sigma and d_j of a
/// (q+1)-face of tau. Includes the |sigma ∩ tau| > q gate; false when either
/// simplex has dimension < q+1.
bool shares_face_novel(const Simplex& sigma, const Simplex& tau, int q, unsigned i, unsigned j);

/// Criterion [II] of the hatted definition: the clamped faces d̂_i(sigma) and
/// d̂_j(tau) have a common q-face. Includes the gate; false when either
/// simplex has dimension < q+1.
bool shares_face_hat(const Simplex& sigma, const Simplex& tau, int q, FaceIndex i, FaceIndex j);

/// Criterion [I] or [II] under the novel definition. Validates i, j.
bool is_q_near_novel(const Simplex& sigma, const Simplex& tau, int q, FaceIndex i, FaceIndex j);

/// Criterion [I] or [II] under the hatted definition.
bool is_q_near_hat(const Simplex& sigma, const Simplex& tau, int q, FaceIndex i, FaceIndex j);

/// Dispatches on dir.definition.
bool is_q_near(const Simplex& sigma, const Simplex& tau, int q, const Direction& dir);
bool shares_face(const Simplex& sigma, const Simplex& tau, int q, const Direction& dir);

/// Criterion [II] of the novel definition decided by splitting each simplex
/// around a removed vertex: there are split points i' >= i in sigma and
/// j' >= j in tau such that the i vertices shared before sigma[i'] followed
/// by the q+1-i shared after it spell the same tuple as the j + (q+1-j)
/// vertices obtained the same way from tau. Empty pieces (i or j equal to 0
/// or q+1) are trivially shared. Inclusion is not considered.
bool is_q_near_decomposition(const Simplex& sigma, const Simplex& tau, int q, unsigned i,
                             unsigned j);

}  // namespace dqa
