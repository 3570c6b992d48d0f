// Wire types of the mutalg session API. The view renders these payloads
// verbatim and never derives mathematics on its own.

export interface ArrowJson {
  src: number;
  tgt: number;
  v: [number, number];
}

export interface QuiverJson {
  n: number;
  d: number[];
  arrows: ArrowJson[];
}

export interface TElemJson {
  a: number;
  b: number;
}

export interface MatrixJson {
  n: number;
  d: number[];
  entries: TElemJson[][];
}

export interface RelationSummary {
  R1: number;
  R2: number;
  R3: number;
  R4: number;
  R5: number;
  total: number;
}

export interface SessionState {
  id: string;
  history: number[];
  quiver: QuiverJson;
  matrix: MatrixJson;
  cartan: number[][];
  d: number[];
  dynkin: string | null;
  dangerous_cycles: number[][];
  relation_summary: RelationSummary;
  root_count: number | null;
  companion_basis: number[][] | null;
}

export interface CreateResponse {
  id: string;
  state: SessionState;
}

export interface BlockedMutation {
  error: string;
  triple: [number, number, number];
  matrix_preview: MatrixJson;
  preview_pure: boolean;
}

export type MutateResult =
  | { kind: "ok"; state: SessionState }
  | { kind: "blocked"; detail: BlockedMutation };
