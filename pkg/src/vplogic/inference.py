"""Entailment between sentences and the deductive closure of a fact.

A positive fact entails everything reachable by generalizing its verb or
any noun slot along declared edges; a negated fact entails the negations
of everything reachable downward (contraposition).  Closures carry
replayable derivations and come back in a deterministic order.
"""

from __future__ import annotations

from collections import deque
from dataclasses import dataclass

from .errors import NotEntailed, SubjectMismatch, TenseMismatch
from .phrase import VerbPhrase, vp_leq
from .sentence import Leaf, Or, Sentence, SentenceExpr

DEFAULT_CAP = 10_000

VERB_GENERAL = "verb_general"
NOUN_GENERAL = "noun_general"
CONTRAPOSITION = "contraposition"
REFLEXIVE = "reflexive"


@dataclass(frozen=True, slots=True)
class ConditionalRule:
    """If <antecedent> then <consequent>.  The antecedent is either an
    opaque text label or a sentence; only the consequent is reasoned on."""

    antecedent: str | Sentence
    consequent: Sentence

    def antecedent_text(self) -> str:
        if isinstance(self.antecedent, Sentence):
            return self.antecedent.text()
        return self.antecedent


@dataclass(frozen=True, slots=True)
class Step:
    """One derivation step: the declared edge used and how it was applied.

    ``slot`` is None for verb steps.  ``contraposition`` steps move a
    negated phrase's core downward along the edge.
    """

    rule: str
    lower: str
    upper: str
    label: str
    slot: int | None = None

    def premise(self) -> str:
        return f"{self.lower} {self.label} {self.upper}"


@dataclass(frozen=True, slots=True)
class Derivation:
    conclusion: Sentence
    steps: tuple[Step, ...]


@dataclass(frozen=True, slots=True)
class ClosureResult:
    derivations: tuple[Derivation, ...]
    truncated: bool = False

    def sentences(self) -> tuple[Sentence, ...]:
        return tuple(d.conclusion for d in self.derivations)

    def __len__(self) -> int:
        return len(self.derivations)

    def __iter__(self):
        return iter(self.derivations)


@dataclass(frozen=True, slots=True)
class PropagationResult:
    rules: tuple[ConditionalRule, ...]
    truncated: bool = False

    def __len__(self) -> int:
        return len(self.rules)

    def __iter__(self):
        return iter(self.rules)


def entails(kb, frm: Sentence, to: Sentence) -> bool:
    """True iff the first sentence forces the second.

    Requires the same subject and the same tense class; the work happens
    in the phrase order, so negated facts entail downward automatically.
    """
    kb.check_sentence(frm)
    kb.check_sentence(to)
    if frm.subject != to.subject:
        raise SubjectMismatch(f"subjects differ: {frm.subject!r} vs {to.subject!r}")
    if frm.tense.key() != to.tense.key():
        raise TenseMismatch(
            f"tense classes differ: {frm.tense.text()!r} vs {to.tense.text()!r}"
        )
    return vp_leq(kb, frm.vp, to.vp)


def _edge_steps(kb, vp: VerbPhrase):
    """Single generalization steps out of a phrase, deterministic order:
    verb steps first, then each noun slot, neighbors sorted by id."""
    if vp.negated:
        for lower in kb.verbs.direct_lowers(vp.verb):
            label = sorted(kb.verbs.labels_between(lower, vp.verb))[0]
            yield (Step(CONTRAPOSITION, lower, vp.verb, label), vp.replace(verb=lower))
        for slot, noun in enumerate(vp.nouns):
            for lower in kb.nouns.direct_lowers(noun):
                label = sorted(kb.nouns.labels_between(lower, noun))[0]
                yield (
                    Step(CONTRAPOSITION, lower, noun, label, slot),
                    vp.replace(slot=slot, noun=lower),
                )
    else:
        for upper in kb.verbs.direct_uppers(vp.verb):
            label = sorted(kb.verbs.labels_between(vp.verb, upper))[0]
            yield (Step(VERB_GENERAL, vp.verb, upper, label), vp.replace(verb=upper))
        for slot, noun in enumerate(vp.nouns):
            for upper in kb.nouns.direct_uppers(noun):
                label = sorted(kb.nouns.labels_between(noun, upper))[0]
                yield (
                    Step(NOUN_GENERAL, noun, upper, label, slot),
                    vp.replace(slot=slot, noun=upper),
                )


def closure(kb, fact: Sentence, cap: int = DEFAULT_CAP) -> ClosureResult:
    """Every sentence strictly entailed by the fact, with derivations.

    Enumerates slot-wise generalization combinations (breadth first, so
    each derivation is a shortest one); the postulated phrase bounds are
    not edges and do not appear.  Output is sorted by step count, then
    verb, then noun ids.  If more than ``cap`` conclusions exist the
    result is cut off and flagged.
    """
    if cap <= 0:
        raise ValueError("cap must be positive")
    kb.check_sentence(fact)
    start = fact.vp
    seen: dict[VerbPhrase, tuple[Step, ...]] = {start: ()}
    queue = deque([start])
    found: list[VerbPhrase] = []
    truncated = False
    while queue and not truncated:
        vp = queue.popleft()
        for step, nxt in _edge_steps(kb, vp):
            if nxt in seen:
                continue
            if len(found) >= cap:
                truncated = True
                break
            seen[nxt] = seen[vp] + (step,)
            found.append(nxt)
            queue.append(nxt)
    derivations = [
        Derivation(Sentence(fact.subject, fact.tense, vp), seen[vp]) for vp in found
    ]
    derivations.sort(key=lambda d: (len(d.steps), d.conclusion.vp.verb, d.conclusion.vp.nouns))
    return ClosureResult(tuple(derivations), truncated)


def replay(kb, source: Sentence, derivation: Derivation) -> Sentence:
    """Re-run a derivation's steps from the source fact."""
    vp = source.vp
    for step in derivation.steps:
        if step.rule == CONTRAPOSITION:
            if not vp.negated:
                raise NotEntailed("contraposition step on a positive phrase")
            if step.slot is None:
                if vp.verb != step.upper:
                    raise NotEntailed(f"step does not apply: {step.premise()}")
                vp = vp.replace(verb=step.lower)
            else:
                if vp.nouns[step.slot] != step.upper:
                    raise NotEntailed(f"step does not apply: {step.premise()}")
                vp = vp.replace(slot=step.slot, noun=step.lower)
        elif step.rule == VERB_GENERAL:
            if vp.negated or vp.verb != step.lower:
                raise NotEntailed(f"step does not apply: {step.premise()}")
            vp = vp.replace(verb=step.upper)
        elif step.rule == NOUN_GENERAL:
            if vp.negated or vp.nouns[step.slot] != step.lower:
                raise NotEntailed(f"step does not apply: {step.premise()}")
            vp = vp.replace(slot=step.slot, noun=step.upper)
        elif step.rule == REFLEXIVE:
            pass
        else:
            raise NotEntailed(f"unknown rule: {step.rule!r}")
    return Sentence(source.subject, source.tense, vp)


def contrapose(kb, implication: tuple[Sentence, Sentence]) -> tuple[Sentence, Sentence]:
    """Turn (A implies B) into (not-B implies not-A)."""
    frm, to = implication
    if not entails(kb, frm, to):
        raise NotEntailed(f"{frm.text()!r} does not entail {to.text()!r}")
    return (to.negate(), frm.negate())


def implication_to_disjunction(kb, implication: tuple[Sentence, Sentence]) -> SentenceExpr:
    """Express an entailed implication as "not-A OR B"."""
    frm, to = implication
    if not entails(kb, frm, to):
        raise NotEntailed(f"{frm.text()!r} does not entail {to.text()!r}")
    return Or(Leaf(frm.negate()), Leaf(to))


def propagate_conditional(kb, rule: ConditionalRule, cap: int = DEFAULT_CAP) -> PropagationResult:
    """One derived rule per closure element of the consequent, with the
    antecedent copied unchanged."""
    result = closure(kb, rule.consequent, cap)
    rules = tuple(
        ConditionalRule(rule.antecedent, derived.conclusion) for derived in result
    )
    return PropagationResult(rules, result.truncated)
