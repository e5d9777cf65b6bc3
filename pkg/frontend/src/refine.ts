/** Keyword selection and refinement flow.
 *
 * The steering loop: highlight words or phrases of the investigative tweet
 * (click a word, or click a start word then shift-click an end word for a
 * phrase), give each keyword a role, watch its live rating, pick from
 * suggested terms, then submit. Edits stay local until the submit
 * round-trip succeeds; a validation error surfaces inline and keeps the
 * draft untouched.
 */

import { ApiError, type ApiClient } from "./api.js";
import type { ViewState } from "./state.js";
import type { KeywordRole } from "./types.js";

const ROLES: KeywordRole[] = ["required", "optional", "excluded"];

export class RefinePanel {
  private anchorIndex: number | null = null;
  private submitting = false;

  constructor(
    private readonly container: HTMLElement,
    private readonly api: ApiClient,
    private readonly state: ViewState,
    private readonly tweetText: string,
    private readonly onRefined: () => Promise<void>,
  ) {
    container.classList.add("pane-refine");
  }

  render(): void {
    const config = this.state.pendingConfig;
    const c = this.container;
    c.innerHTML = "";
    if (!config) return;

    // --- investigative tweet with selectable word spans
    const tweetBox = document.createElement("p");
    tweetBox.className = "refine-tweet";
    const words = this.tweetText.split(/\s+/).filter(Boolean);
    words.forEach((word, index) => {
      const span = document.createElement("span");
      span.className = "tweet-word";
      span.setAttribute("data-index", String(index));
      span.textContent = word;
      span.addEventListener("click", (event) => {
        void this.pickSpan(index, (event as MouseEvent).shiftKey, words);
      });
      tweetBox.appendChild(span);
      tweetBox.appendChild(document.createTextNode(" "));
    });
    c.appendChild(tweetBox);

    // --- manual term entry
    const manual = document.createElement("input");
    manual.className = "refine-manual-term";
    manual.placeholder = "add a search term";
    manual.addEventListener("keydown", (event) => {
      if ((event as KeyboardEvent).key === "Enter" && manual.value.trim()) {
        void this.addTerm(manual.value.trim());
        manual.value = "";
      }
    });
    c.appendChild(manual);

    // --- current keywords with roles and live ratings
    const list = document.createElement("ul");
    list.className = "refine-keywords";
    for (const term of config.search_terms) {
      const item = document.createElement("li");
      item.className = "refine-keyword";
      item.setAttribute("data-term", term);

      const label = document.createElement("span");
      label.textContent = term;
      item.appendChild(label);

      const rating = document.createElement("span");
      rating.className = "keyword-rating";
      rating.setAttribute("data-term", term);
      rating.textContent = "…";
      item.appendChild(rating);
      void this.fillRating(term, rating);

      const role = document.createElement("select");
      role.className = "keyword-role";
      const none = document.createElement("option");
      none.value = "";
      none.textContent = "search only";
      role.appendChild(none);
      for (const r of ROLES) {
        const option = document.createElement("option");
        option.value = r;
        option.textContent = r;
        option.selected = config.keywords.some((k) => k.term === term && k.role === r);
        role.appendChild(option);
      }
      role.addEventListener("change", () => {
        this.state.editConfig((cfg) => {
          cfg.keywords = cfg.keywords.filter((k) => k.term !== term);
          if (role.value) cfg.keywords.push({ term, role: role.value as KeywordRole });
        });
      });
      item.appendChild(role);

      const remove = document.createElement("button");
      remove.className = "keyword-remove";
      remove.textContent = "×";
      remove.addEventListener("click", () => {
        this.state.editConfig((cfg) => {
          cfg.search_terms = cfg.search_terms.filter((t) => t !== term);
          cfg.keywords = cfg.keywords.filter((k) => k.term !== term);
        });
        this.render();
      });
      item.appendChild(remove);
      list.appendChild(item);
    }
    c.appendChild(list);

    // --- filter tuning
    const controls = document.createElement("div");
    controls.className = "refine-controls";

    const mode = document.createElement("select");
    mode.className = "refine-required-mode";
    for (const value of ["all", "at_least_one"]) {
      const option = document.createElement("option");
      option.value = value;
      option.textContent = `required: ${value}`;
      option.selected = config.required_mode === value;
      mode.appendChild(option);
    }
    mode.addEventListener("change", () => {
      this.state.editConfig((cfg) => {
        cfg.required_mode = mode.value as "all" | "at_least_one";
      });
    });
    controls.appendChild(mode);

    const threshold = document.createElement("input");
    threshold.className = "refine-threshold";
    threshold.type = "number";
    threshold.min = "0";
    threshold.value = String(config.optional_threshold);
    threshold.addEventListener("change", () => {
      this.state.editConfig((cfg) => {
        cfg.optional_threshold = Number(threshold.value);
      });
    });
    controls.appendChild(threshold);
    c.appendChild(controls);

    // --- suggestions
    const suggestBox = document.createElement("div");
    suggestBox.className = "refine-suggestions";
    c.appendChild(suggestBox);
    void this.fillSuggestions(suggestBox);

    // --- submit + inline errors
    const error = document.createElement("div");
    error.className = "refine-error";
    error.style.display = "none";
    c.appendChild(error);

    const submit = document.createElement("button");
    submit.className = "refine-submit";
    submit.textContent = "Recompute story";
    submit.addEventListener("click", () => void this.submit(submit, error));
    c.appendChild(submit);
  }

  private async pickSpan(index: number, extend: boolean, words: string[]): Promise<void> {
    if (extend && this.anchorIndex !== null) {
      const [lo, hi] = [Math.min(this.anchorIndex, index), Math.max(this.anchorIndex, index)];
      await this.addTerm(words.slice(lo, hi + 1).join(" "));
      this.anchorIndex = null;
    } else {
      this.anchorIndex = index;
      await this.addTerm(words[index]);
    }
  }

  private clean(term: string): string {
    return term.toLowerCase().replace(/[.,;:!?"()]+/g, " ").trim();
  }

  private async addTerm(raw: string): Promise<void> {
    const term = this.clean(raw);
    if (!term) return;
    const config = this.state.pendingConfig;
    if (!config || config.search_terms.includes(term)) return;
    this.state.editConfig((cfg) => {
      cfg.search_terms.push(term);
    });
    this.render();
  }

  private async fillRating(term: string, target: HTMLElement): Promise<void> {
    if (!this.state.activeInvestigation) return;
    try {
      const rating = await this.api.rateKeyword(this.state.activeInvestigation, term);
      target.textContent = rating.rating.toFixed(2);
    } catch {
      target.textContent = "?";
    }
  }

  private async fillSuggestions(box: HTMLElement): Promise<void> {
    if (!this.state.activeInvestigation) return;
    try {
      const { terms } = await this.api.suggestKeywords(this.state.activeInvestigation, 8);
      box.innerHTML = "";
      for (const term of terms) {
        const chip = document.createElement("button");
        chip.className = "suggestion-chip";
        chip.textContent = `+ ${term}`;
        chip.addEventListener("click", () => void this.addTerm(term));
        box.appendChild(chip);
      }
    } catch {
      box.textContent = "suggestions unavailable";
    }
  }

  private async submit(button: HTMLButtonElement, error: HTMLElement): Promise<void> {
    const config = this.state.pendingConfig;
    if (!config || !this.state.activeInvestigation || this.submitting) return;
    this.submitting = true;
    button.disabled = true;
    error.style.display = "none";
    try {
      await this.api.putConfig(this.state.activeInvestigation, config);
      await this.onRefined();
    } catch (err) {
      // Validation problems surface inline; the pending draft stays as-is
      // so the user can fix and resubmit.
      error.style.display = "block";
      error.textContent = err instanceof ApiError ? err.detail : String(err);
    } finally {
      this.submitting = false;
      button.disabled = false;
    }
  }
}
