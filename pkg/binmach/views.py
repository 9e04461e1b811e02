# binmach/views.py
import logging

from django.http import HttpResponseBadRequest, JsonResponse
from django.views.decorators.csrf import csrf_exempt

from .cli import unit_costs, workers
from .compare import compare_sequence, synthesize
from .exceptions import BinMachError
from .forms import CompareForm, SynthForm
from .machine import format_machine

logger = logging.getLogger(__name__)


def _form_errors(form):
    return JsonResponse({"status": "error", "errors": form.errors.get_json_data()}, status=400)


@csrf_exempt
def synth(request):
    """POST sequence/parallel/dc_policy/perm -> stats and the BINMACH 1 text."""
    if request.method != "POST":
        return HttpResponseBadRequest("Invalid Request")
    form = SynthForm(request.POST)
    if not form.is_valid():
        return _form_errors(form)

    data = form.cleaned_data
    a2, p = data["sequence"], data["parallel"]
    try:
        result = synthesize(a2, p, data["dc_policy"], data["perm"], unit_costs(), workers())
    except BinMachError as exc:
        return JsonResponse({"status": "error", "message": str(exc)}, status=400)

    return JsonResponse({
        "status": "success",
        "k": len(a2),
        "p": p,
        "m": 1 << p,
        "N_max": result.n_max,
        "stages": result.machine.n_bits,
        "pad": "".join(map(str, result.encoding.pad)),
        "cost": result.cost.as_dict(),
        "machine": format_machine(result.machine),
    })


@csrf_exempt
def compare(request):
    """POST sequence/parallel/dc_policy -> one comparison row."""
    if request.method != "POST":
        return HttpResponseBadRequest("Invalid Request")
    form = CompareForm(request.POST)
    if not form.is_valid():
        return _form_errors(form)

    data = form.cleaned_data
    try:
        row = compare_sequence("request", data["sequence"], data["parallel"], data["dc_policy"],
                               unit_costs(), workers=workers())
    except BinMachError as exc:
        return JsonResponse({"status": "error", "message": str(exc)}, status=400)
    return JsonResponse({"status": "success", "row": row.as_dict()})
