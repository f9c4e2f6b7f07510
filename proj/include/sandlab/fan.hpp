#pragma once

// Recurrent configurations of the fan F_n, properly-marked {L,R}-words and
// subgraphs of the path P_n containing n.

#include <functional>
#include <string>
#include <vector>

#include "sandlab/bigint.hpp"
#include "sandlab/graph.hpp"
#include "sandlab/sandpile.hpp"

namespace sandlab {

enum class Letter { Lu, Lm, R };

/// Word over {Lu, Lm, R} in which no Lm is immediately followed by R.
/// Letter w_i labels the path edge {i, i+1}.
class PMWord {
public:
    PMWord() = default;
    explicit PMWord(std::vector<Letter> letters);

    const std::vector<Letter>& letters() const { return letters_; }
    std::size_t size() const { return letters_.size(); }
    int marked_count() const;
    int unmarked_count() const;

    /// "Lu Lu R R Lm Lu R Lm"
    std::string to_string() const;
    static PMWord parse(const std::string& text);

    friend auto operator<=>(const PMWord&, const PMWord&) = default;

private:
    std::vector<Letter> letters_;
};

std::string to_string(Letter letter);
Letter letter_from_string(const std::string& token);

/// True when no Lm is immediately followed by R.
bool is_properly_marked(const std::vector<Letter>& letters);

/// Every pair of zeros i < j has a 2 strictly between (ASM and SSM agree).
bool fan_is_recurrent(const Configuration& c);

/// Left-to-right marked orientation of the path, read as a word.
PMWord phi_fan(const Configuration& c);
/// Inverse of phi_fan: path in-degrees plus one grain at vertex j+1 per mark on w_j.
Configuration psi_fan(const PMWord& w);

/// Orientation of P_n described by the letters (L: i+1 -> i, R: i -> i+1).
Orientation path_orientation(const PMWord& w);

/// T(w): vertices with an L on their right edge plus n; edges labelled Lm.
Subgraph word_to_subgraph(const PMWord& w);
/// T'(s) for a subgraph of P_n that contains n.
PMWord subgraph_to_word(const Subgraph& s, int n);

/// Words of length n-1 with k marked and r unmarked L's.
BigInt count_pm_words(int n, int k, int r);
/// Recurrent configurations of F_n with level k.
BigInt count_rec_fan(int n, int k);

/// All properly-marked words of the given length, lexicographic in (Lu, Lm, R).
void for_each_pm_word(int length, const std::function<void(const PMWord&)>& visit);

}  // namespace sandlab
