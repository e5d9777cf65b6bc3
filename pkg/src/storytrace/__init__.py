"""storytrace: investigate how a rumor spread through an archived tweet corpus."""

from .bursts import (
    BurstScore,
    PropagationDataset,
    bin_intervals,
    build_propagation_dataset,
    burstiness,
    find_breaking_interval,
    find_originator,
)
from .corpus import Corpus, CorpusError, SearchWindow, fetch_recent, load_corpus, search
from .metrics import (
    LinkEntry,
    StoryMetrics,
    build_link_bibliography,
    compute_metrics,
    crowd_signal,
    h_index,
    propagation_level,
    scatter_export,
)
from .models import (
    ConfigValidationError,
    Interval,
    InvestigationConfig,
    KeywordSpec,
    RecordValidationError,
    TweetRecord,
    UserRef,
    serialize_record,
    validate_record,
)
from .negation import NegationLexicon, is_negation, load_lexicon_file, split_story
from .networks import (
    CommunityAssignment,
    CoRetweetedGraph,
    RetweetGraph,
    build_coretweeted_graph,
    build_retweet_graph,
    detect_communities,
    main_actors,
)
from .pipeline import PipelineParams, StoryArtifacts, artifact_documents, canonical_json, run_pipeline
from .relevance import (
    KeywordRating,
    RelevantSet,
    build_relevant_set,
    is_relevant,
    rate_keyword,
    suggest_keywords,
)
from .summary import InvestigationSummary, summarize
from .timeline import TimelineSeries, build_timeline, list_bin

__version__ = "0.1.0"
