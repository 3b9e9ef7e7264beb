#ifndef CYCOUNT_LABELED_HPP
#define CYCOUNT_LABELED_HPP

#include <string>
#include <vector>

#include "cycount/counts.hpp"
#include "cycount/graph.hpp"

namespace cycount {

// One label sequence with its count (or weight sum on integer-weighted
// graphs). The sequence is stored as label indices into Graph::alphabet(),
// one byte each; cycle sequences are canonicalized to their lexicographically
// minimal rotation.
struct WordCount {
    std::string word;
    BigInt count;
};

struct LabelSequenceCounts {
    int ell = 0;
    bool truncated = false;
    // by_length[k-1]: sequences of k symbols (cycles) or k+1 symbols (paths,
    // both endpoints included), sorted lexicographically, zero entries
    // dropped.
    std::vector<std::vector<WordCount>> by_length;

    BigInt total(int k) const;  // sum over sequences of length-k objects
};

// Smallest rotation of a cyclic word.
std::string canonical_rotation(const std::string& word);

// Label sequence of a word rendered through the graph's alphabet.
std::string render_word(const Graph& g, const std::string& word);

// Counts of simple cycles (resp. simple paths) refined by the sequence of
// vertex labels along the object. Marginalizing over sequences reproduces
// the unlabeled series. Requires vertex labels and integral weights.
LabelSequenceCounts labeled_cycle_sequences(const Graph& g, int ell);
LabelSequenceCounts labeled_path_sequences(const Graph& g, int from, int to, int ell);

}  // namespace cycount

#endif
