from django.urls import path
from . import views

app_name = "binmach"

urlpatterns = [
    path("synth/", views.synth, name="synth"),
    path("compare/", views.compare, name="compare"),
]
