# -*- coding: utf-8 -*-
import io

import pandas as pd
from openpyxl.styles import Alignment, Font, PatternFill
from openpyxl.utils import get_column_letter

from monoid import FiniteMonoid

HEADER_FILL = PatternFill(start_color="1F4E78", end_color="1F4E78", fill_type="solid")
HEADER_FONT = Font(bold=True, color="FFFFFF")
CENTER = Alignment(horizontal="center", vertical="center")
STATUS_FILLS = {
    "PASS": PatternFill(start_color="C6EFCE", end_color="C6EFCE", fill_type="solid"),
    "FAIL": PatternFill(start_color="FFC7CE", end_color="FFC7CE", fill_type="solid"),
    "BUDGET": PatternFill(start_color="FFEB9C", end_color="FFEB9C", fill_type="solid"),
}


def _style_header_row(worksheet, width: int = 22):
    for col_idx, cell in enumerate(worksheet[1], 1):
        cell.fill = HEADER_FILL
        cell.font = HEADER_FONT
        cell.alignment = CENTER
        worksheet.column_dimensions[get_column_letter(col_idx)].width = width


def export_cayley_table(M: FiniteMonoid, sheet_name: str = "Bang_Nhan"):
    """
    Bảng nhân của M ra file Excel: dòng đầu và cột đầu là nhãn phần tử, tô màu tiêu đề.
    """
    df = M.to_dataframe()
    output = io.BytesIO()
    with pd.ExcelWriter(output, engine="openpyxl") as writer:
        df.to_excel(writer, sheet_name=sheet_name)
        worksheet = writer.sheets[sheet_name]
        _style_header_row(worksheet, width=12)
        # cột nhãn bên trái cũng là tiêu đề
        for row in range(2, worksheet.max_row + 1):
            cell = worksheet.cell(row=row, column=1)
            cell.fill = HEADER_FILL
            cell.font = HEADER_FONT
            cell.alignment = CENTER
            for col in range(2, worksheet.max_column + 1):
                worksheet.cell(row=row, column=col).alignment = CENTER
    output.seek(0)
    return output


def export_report(report):
    """Báo cáo kiểm chứng: sheet 'Claims' (mỗi mệnh đề một dòng) và sheet 'Summary'."""
    rows = [
        {
            "ID": c.id,
            "Mệnh đề": c.title,
            "Trạng thái": c.status,
            "Nhân chứng": "" if c.witness is None else str(c.witness),
            "Thời gian (ms)": c.millis,
        }
        for c in report.claims
    ]
    df_claims = pd.DataFrame(rows, columns=["ID", "Mệnh đề", "Trạng thái", "Nhân chứng", "Thời gian (ms)"])
    df_summary = pd.DataFrame(
        [{"Trạng thái": k.upper(), "Số lượng": v} for k, v in report.summary.items()]
    )

    output = io.BytesIO()
    with pd.ExcelWriter(output, engine="openpyxl") as writer:
        df_claims.to_excel(writer, index=False, sheet_name="Claims")
        df_summary.to_excel(writer, index=False, sheet_name="Summary")

        ws = writer.sheets["Claims"]
        _style_header_row(ws)
        ws.column_dimensions["B"].width = 60
        for row in range(2, ws.max_row + 1):
            ws.cell(row=row, column=1).alignment = CENTER
            status_cell = ws.cell(row=row, column=3)
            status_cell.alignment = CENTER
            fill = STATUS_FILLS.get(status_cell.value)
            if fill is not None:
                status_cell.fill = fill
        _style_header_row(writer.sheets["Summary"])
    output.seek(0)
    return output
