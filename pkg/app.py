# -*- coding: utf-8 -*-
from flask import Flask, jsonify, request, Response, send_file, stream_with_context
import json
import logging
import threading, queue, time
from collections import deque

import config
from checkers.checker_rees import check_rees
from checkers.checker_table import check_table
from errors import BudgetExceededError, WorkbenchError
from export_handler import export_cayley_table
from identities import parse_identity
from rees import parse_word_set, rees_quotient, resolve_monoid_spec
from tasks import FINAL_PREFIX, VerifyConfig, run_claims_iter

logger = logging.getLogger(__name__)

XLSX_MIMETYPE = 'application/vnd.openxmlformats-officedocument.spreadsheetml.sheet'
SSE_HEADERS = {"Cache-Control": "no-cache", "Connection": "keep-alive", "X-Accel-Buffering": "no"}


def _sse(msg: str):
    return f"data: {msg}\n\n"


# ========== JOB MANAGER ==========
class StreamJob:
    def __init__(self, cfg: VerifyConfig, claims=None):
        self.cfg = cfg
        self.claims = claims
        self.thread = None
        self.subscribers = []
        self.buffer = deque(maxlen=500)
        self.lock = threading.Lock()
        self.done = False

    def start_if_needed(self):
        with self.lock:
            if self.thread and self.thread.is_alive(): return
            if self.done: return
            self.thread = threading.Thread(target=self._run, daemon=True)
            self.thread.start()

    def _run(self):
        try:
            self._broadcast_line("retry: 3000")
            for event in run_claims_iter(self.cfg, only=self.claims):
                for line in _sse(event).splitlines(): self._broadcast_line(line)
        except Exception as e:
            logger.exception("Job kiểm chứng lỗi")
            self._broadcast_line(f'data: ERROR:{json.dumps({"status": "error", "message": f"Job crash: {e}"}, ensure_ascii=False)}')
            self._broadcast_line("")
        finally:
            self.done = True

    def _broadcast_line(self, line: str):
        with self.lock:
            self.buffer.append(line)
            dead = []
            for q in self.subscribers:
                try: q.put_nowait(line)
                except queue.Full: dead.append(q)
            if dead: self.subscribers = [q for q in self.subscribers if q not in dead]

    def subscribe(self):
        q = queue.Queue(maxsize=1000)
        with self.lock:
            for line in self.buffer:
                try: q.put_nowait(line)
                except queue.Full: break
            self.subscribers.append(q)
        return q


JOBS = {}
JOBS_LOCK = threading.Lock()


def get_or_create_job(cfg: VerifyConfig, claims=None):
    key = f"verify_{cfg.max_n}_{cfg.seed}_{','.join(claims) if claims else 'ALL'}"
    with JOBS_LOCK:
        job = JOBS.get(key)
        if not job:
            job = StreamJob(cfg, claims)
            JOBS[key] = job
    job.start_if_needed()
    return job


# ========== APP ==========
app = Flask(__name__)


def _error_response(e: Exception):
    if isinstance(e, BudgetExceededError):
        return jsonify({"status": "error", **e.to_dict()}), 422
    if isinstance(e, WorkbenchError):
        return jsonify({"status": "error", **e.to_dict()}), 400
    logger.exception("Lỗi không xác định")
    return jsonify({"status": "error", "code": "ERROR", "message": str(e)}), 500


def _int_arg(name: str, default=None):
    raw = request.args.get(name, '').strip()
    if not raw: return default
    try:
        return int(raw)
    except ValueError:
        raise WorkbenchError(f"Tham số {name} phải là số nguyên: {raw!r}")


@app.route('/')
def index():
    return jsonify({
        "endpoints": ["/api/rees", "/api/rees.xlsx", "/api/check", "/api/verify_stream"],
        "presets": ["M_SCRIPT", "A21", "B21", "TRIVIAL"],
    })


# ==========================================
# API THƯƠNG REES
# ==========================================
@app.route('/api/rees', methods=['GET'])
def api_rees():
    try:
        Q = rees_quotient(parse_word_set(request.args.get('words', '')))
        return jsonify({"status": "success", "word_set": str(Q.source), "order": Q.order, "monoid": Q.monoid.to_json()})
    except Exception as e:
        return _error_response(e)


@app.route('/api/rees.xlsx', methods=['GET'])
def api_rees_xlsx():
    try:
        Q = rees_quotient(parse_word_set(request.args.get('words', '')))
        excel_bytes = export_cayley_table(Q.monoid)
        filename = f"BangNhan_M({str(Q.source).replace(',', '_')}).xlsx"
        return send_file(excel_bytes, as_attachment=True, download_name=filename, mimetype=XLSX_MIMETYPE)
    except Exception as e:
        return _error_response(e)


@app.route('/api/check', methods=['GET'])
def api_check():
    try:
        M, Q = resolve_monoid_spec(request.args.get('monoid', ''))
        identity = parse_identity(request.args.get('identity', ''))
        method = request.args.get('method', '').strip() or ('rees' if Q is not None else 'table')
        budget = _int_arg('budget')
        if method == 'table':
            outcome = check_table(Q or M, identity, budget=budget)
        elif method == 'rees' and Q is not None:
            outcome = check_rees(Q, identity, budget=budget)
        else:
            raise WorkbenchError(f"Phương pháp không hợp lệ cho monoid này: {method!r}")
        return jsonify({"identity": str(identity), **outcome.to_json(M)})
    except Exception as e:
        return _error_response(e)


# ==========================================
# API KIỂM CHỨNG (SSE)
# ==========================================
@app.route('/api/verify_stream')
def api_verify_stream():
    try:
        cfg = VerifyConfig(
            max_n=_int_arg('max_n', config.VERIFY_MAX_N),
            seed=_int_arg('seed', config.VERIFY_SEED),
        )
        claims = [c.strip() for c in request.args.get('claims', '').split(',') if c.strip()] or None
    except WorkbenchError as e:
        msg = str(e)
        def err(): yield _sse(f"ERROR:{json.dumps({'status': 'error', 'message': msg}, ensure_ascii=False)}")
        return Response(err(), mimetype='text/event-stream')

    job = get_or_create_job(cfg, claims)
    q = job.subscribe()

    def stream():
        last = time.monotonic()
        while True:
            try:
                line = q.get(timeout=3)
                yield line + "\n"
                last = time.monotonic()
                if line.startswith(f"data: {FINAL_PREFIX}") or line.startswith("data: ERROR:"): break
            except queue.Empty:
                if job.done: break
                now = time.monotonic()
                if now - last > 10:
                    yield "data: 💓 heartbeat\n\n"
                    last = now
        yield "\n"
    return Response(stream_with_context(stream()), mimetype='text/event-stream', headers=SSE_HEADERS)


if __name__ == '__main__':
    app.run(host=config.WEB_HOST, port=config.WEB_PORT, debug=False)
