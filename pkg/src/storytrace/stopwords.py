"""Function-word lists used only by keyword suggestion.

Without these, suggested terms degenerate to articles and prepositions.
The lists are intentionally small; suggestion quality, not linguistic
coverage, is the goal.
"""

from __future__ import annotations

STOPWORDS: dict[str, frozenset[str]] = {
    "en": frozenset(
        """
        a about after all also am an and any are as at be because been before
        being but by can could did do does for from get got had has have he her
        here him his how i if in into is it its just like me more most my no
        not now of on one only or other our out over she so some than that the
        their them then there these they this to too was we were what when
        where which who will with would you your rt via
        """.split()
    ),
    "es": frozenset(
        """
        a al algo como con de del desde donde el ella ellas ellos en entre era
        es esa ese eso esta está este esto fue ha hay la las le les lo los mas
        más mi mis muy nada ni no nos o para pero por que qué se ser si sí sin
        sobre son su sus también te tiene tienen todo tu un una uno unos y ya
        yo rt
        """.split()
    ),
}

# Suggestion pools may mix languages inside one story; the combined set
# is the default filter.
DEFAULT_STOPWORDS: frozenset[str] = frozenset().union(*STOPWORDS.values())


def stopwords_for(lang: str | None) -> frozenset[str]:
    if lang:
        tag = lang.split("-")[0].lower()
        if tag in STOPWORDS:
            return STOPWORDS[tag]
    return DEFAULT_STOPWORDS
