#ifndef DELINS_BALL_HPP
#define DELINS_BALL_HPP

#include <string>
#include <vector>

#include "delins/checked.hpp"
#include "delins/config.hpp"
#include "delins/word.hpp"

namespace delins {

enum class Direction { deletion, insertion };

std::string direction_name(Direction d);
Direction parse_direction(const std::string& name);

struct BallEntry {
    Word word;
    Weight weight;
};

/// An insertion or deletion ball with embedding multiplicities. Entries are
/// deduplicated and kept in lexicographic order; weights are computed per
/// member by the embedding dynamic program, never by counting generation
/// events.
///
/// Insertion direction: entries are the k-supersequences x of the center y,
/// weight omega_y(x); the weights sum to C(|y|+k, k) * q^k.
/// Deletion direction: entries are the k-subsequences y of the center x,
/// weight omega_y(x); the weights sum to C(|x|, k).
struct WeightedBall {
    Word center;
    int k;
    Direction direction;
    std::vector<BallEntry> entries;

    Weight weight_total() const;
    /// Line-oriented "word<TAB>weight" form, entries in lexicographic order.
    std::string to_text() const;
};

/// Closed-form size of the k-insertion ball around any word of the given
/// length: sum_{0<=i<=k} C(length+k, i) (q-1)^i.
Weight insertion_ball_size(int length, int k, int q);

WeightedBall insertion_ball(const Word& y, int k, const Limits& limits = {});
WeightedBall deletion_ball(const Word& x, int k, const Limits& limits = {});

/// For binary y with profile (r_1..r_R) and 0 <= i <= R, the unique binary
/// supersequence whose profile inserts two unit runs after run i, together
/// with its multiplicity 1 + sum_{j=b_i}^{f_i} r_j.
struct TwoRunInsertion {
    Word x;
    Weight weight;
};
TwoRunInsertion two_run_insertion_embedding(const Word& y, int run_index);

/// The three distinguished supersequences of a binary word y with profile
/// (r_1..r_R): beta with profile (1,1,r_1..r_R) and weight 1+sum_{j<=f_0} r_j,
/// gamma with profile (2,r_1..r_R) and weight 1, delta with profile
/// (1,r_1+1,r_2..r_R) and weight r_1+1.
struct SpecialSupersequences {
    Word beta;
    Weight beta_weight;
    Word gamma;
    Weight gamma_weight;
    Word delta;
    Weight delta_weight;
};
SpecialSupersequences special_supersequences(const Word& y);

}  // namespace delins

#endif
