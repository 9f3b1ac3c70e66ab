#pragma once

#include <vector>

#include "mjc/budget.hpp"
#include "mjc/sequences.hpp"
#include "mjc/word.hpp"

namespace mjc {

/// All (b,k)-embeddings; for b = 0 the single empty embedding.
std::vector<Embedding> enumerate_embeddings(int b, int k);

/// The forward pass α^(0) -> α^(ℓ): γ = α^(ℓ), δ_i = first word of α^(i-1)
/// when card i catches, else the empty word.
SequenceEmbedding sequence_to_embedding(const CardSequence& seq);

/// The backward reconstruction. Throws InvalidArgument when δ_i does not
/// match the occurrences of symbol i.
CardSequence embedding_to_sequence(const SequenceEmbedding& se);

/// All (b,k,ℓ)-embeddings, built word by word with running symbol budgets.
std::vector<SequenceEmbedding> enumerate_sequence_embeddings(int b, int k, int ell, const Budget& budget = {});

}  // namespace mjc
